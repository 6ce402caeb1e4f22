#include "dkpent/ymaps.hpp"

#include <stdexcept>

namespace dkpent::dmr {

namespace {

// x0^{n_1-1} x1 ... x0^{n_k-1} x1 -> y-word (n_1, ..., n_k); empty for words
// ending in x0.
bool x_word_to_y(const ncalg::Word& w, ncalg::Word& out) {
    out.clear();
    int zeros = 0;
    for (ncalg::Letter l : w) {
        if (l == 0) {
            ++zeros;
        } else {
            out.push_back(static_cast<ncalg::Letter>(zeros)); // y_{zeros+1}
            zeros = 0;
        }
    }
    return zeros == 0;
}

} // namespace

NCPoly pi_y(const NCPoly& p) {
    NCPoly r(ncalg::y_alphabet());
    for (const auto& [w, c] : p.terms()) {
        ncalg::Word yw;
        if (x_word_to_y(w, yw)) r.add_term(yw, c);
    }
    return r;
}

NCPoly corr(const NCPoly& p) {
    NCPoly r(ncalg::y_alphabet());
    for (const auto& [w, c] : p.terms()) {
        if (w.empty() || w.back() != 1) continue;
        bool pure = true;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] != 0) pure = false;
        if (!pure) continue;
        const int n = static_cast<int>(w.size());
        ncalg::Word yw(static_cast<std::size_t>(n), 0); // y_1^n
        Scalar coeff = Scalar(n % 2 == 1 ? 1 : -1) / n;
        r.add_term(yw, c * coeff);
    }
    return r;
}

NCPoly psi_star(const NCPoly& p) { return corr(p) + pi_y(p); }

NCPoly y_to_x(const NCPoly& yp) {
    NCPoly r(ncalg::x_alphabet());
    for (const auto& [w, c] : yp.terms()) {
        ncalg::Word xw;
        for (ncalg::Letter l : w) {
            for (ncalg::Letter i = 0; i < l; ++i) xw.push_back(0);
            xw.push_back(1);
        }
        r.add_term(xw, c);
    }
    return r;
}

TensorPoly stuffle_coproduct(const NCPoly& yp) {
    if (!yp.alph() || !yp.alph()->is_y_family())
        throw std::invalid_argument("stuffle_coproduct expects a Y-polynomial");
    TensorPoly r(yp.alph());
    for (const auto& [w, c] : yp.terms()) {
        TensorPoly acc(yp.alph());
        acc.add_term({}, {}, c);
        for (ncalg::Letter l : w) {
            TensorPoly gen(yp.alph());
            gen.add_term(ncalg::Word{l}, {}, 1);
            gen.add_term({}, ncalg::Word{l}, 1);
            const int n = static_cast<int>(l) + 1;
            for (int n1 = 1; n1 < n; ++n1)
                gen.add_term(ncalg::Word{static_cast<ncalg::Letter>(n1 - 1)},
                             ncalg::Word{static_cast<ncalg::Letter>(n - n1 - 1)}, 1);
            acc = acc * gen;
        }
        r += acc;
    }
    return r;
}

Dmr0Report dmr0_membership(const LieElement& psi) {
    if (psi.min_degree() >= 0 && psi.min_degree() < 3)
        throw std::invalid_argument("dmr0_membership needs degree >= 3");
    Dmr0Report rep;
    NCPoly star = psi_star(freelie::to_ncpoly(psi));
    TensorPoly defect = stuffle_coproduct(star);
    NCPoly unit = NCPoly::unit(ncalg::y_alphabet());
    defect -= ncalg::tensor(star, unit);
    defect -= ncalg::tensor(unit, star);
    rep.defect = std::move(defect);
    rep.pass = rep.defect.is_zero();
    return rep;
}

std::vector<std::pair<ncalg::Word, ncalg::Word>> y_pair_basis(int weight) {
    std::vector<std::pair<ncalg::Word, ncalg::Word>> out;
    for (int p = 1; p < weight; ++p)
        for (const Composition& a : compositions_of(p))
            for (const Composition& b : compositions_of(weight - p))
                out.emplace_back(to_y_word(a), to_y_word(b));
    return out;
}

linalg::Vec dmr0_defect_vec(const LieElement& psi, int weight) {
    NCPoly star = psi_star(freelie::to_ncpoly(psi));
    TensorPoly defect = stuffle_coproduct(star);
    NCPoly unit = NCPoly::unit(ncalg::y_alphabet());
    defect -= ncalg::tensor(star, unit);
    defect -= ncalg::tensor(unit, star);
    auto basis = y_pair_basis(weight);
    linalg::Vec v(basis.size(), Scalar(0));
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = defect.coeff(basis[i].first, basis[i].second);
    return v;
}

} // namespace dkpent::dmr
