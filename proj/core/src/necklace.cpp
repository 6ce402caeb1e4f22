#include "dkpent/necklace.hpp"

#include <stdexcept>

namespace dkpent::krv {

TDer hamiltonian(const CyclicPoly& a) {
    ncalg::NCPoly n = ncalg::symmetrize(a.reduced());
    return TDer(ncalg::d_right(n, 0), ncalg::d_right(n, 1));
}

CyclicPoly hamiltonian_inverse(const TDer& u) {
    auto x = ncalg::x_alphabet();
    ncalg::NCPoly inner = ncalg::NCPoly::letter(x, 0) * u.a0 + ncalg::NCPoly::letter(x, 1) * u.a1;
    return ncalg::cyclic_project(inner);
}

CyclicPoly necklace_bracket(const CyclicPoly& a, const CyclicPoly& b) {
    return hamiltonian_inverse(tder_bracket(hamiltonian(a), hamiltonian(b)));
}

WedgePoly delta_tilde_cyclic(const CyclicPoly& a) {
    // Well-defined on cyclic words because wedge o delta_tilde kills
    // commutators.
    WedgePoly r(a.alph());
    for (const auto& [w, c] : a.terms()) {
        ncalg::TensorPoly t = ncalg::delta_tilde(ncalg::NCPoly(a.alph(), w, c));
        r += ncalg::wedge_project(t);
    }
    return r;
}

WedgePoly necklace_cobracket(const CyclicPoly& a) {
    return delta_tilde_cyclic(divergence(hamiltonian(a)));
}

bool div_mu_identity_check(const ncalg::Word& cyclic_rep) {
    const int m = static_cast<int>(cyclic_rep.size());
    if (m < 2) throw std::invalid_argument("div_mu_identity_check needs degree >= 2");
    auto x = ncalg::x_alphabet();
    CyclicPoly a(x);
    a.add_class(cyclic_rep, 1);
    CyclicPoly lhs = divergence(hamiltonian(a));
    ncalg::NCPoly mu_n = ncalg::reduced_coaction(ncalg::symmetrize(a));
    CyclicPoly rhs = ncalg::cyclic_project(mu_n);
    rhs *= Scalar(1, m - 1);
    return lhs == rhs;
}

std::vector<ncalg::Word> cyclic_word_basis(int degree) {
    std::vector<ncalg::Word> out;
    for (const ncalg::Word& w : freelie::all_words(2, degree))
        if (ncalg::min_rotation(w) == w) out.push_back(w);
    return out;
}

linalg::Vec cyclic_to_vec(const CyclicPoly& c, int degree) {
    std::vector<ncalg::Word> basis = cyclic_word_basis(degree);
    linalg::Vec v(basis.size(), Scalar(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = c.terms().find(basis[i]);
        if (it != c.terms().end()) v[i] = it->second;
    }
    return v;
}

linalg::Subspace cyclic_span(int degree, bool with_xinf) {
    auto x = ncalg::x_alphabet();
    std::vector<ncalg::Word> basis = cyclic_word_basis(degree);
    linalg::Matrix rows(0, basis.size());
    ncalg::NCPoly x0 = ncalg::NCPoly::letter(x, 0);
    ncalg::NCPoly x1 = ncalg::NCPoly::letter(x, 1);
    std::vector<ncalg::NCPoly> gens = {x0, x1};
    if (with_xinf) gens.push_back(x0 + x1);
    for (const auto& g : gens) {
        ncalg::NCPoly power = ncalg::NCPoly::unit(x);
        for (int i = 0; i < degree; ++i) power = power * g;
        rows.push_row(cyclic_to_vec(ncalg::cyclic_project(power), degree));
    }
    return linalg::Subspace(basis.size(), std::move(rows));
}

KrvReport krv_membership(const TDer& u, KrvKind kind, bool with_xinf) {
    KrvReport rep;
    rep.special_ok = is_special(u);
    rep.theta_ok = kind == KrvKind::Krv2 || is_theta_invariant(u);
    rep.div_value = divergence(u);
    rep.div_ok = true;
    if (!rep.div_value.is_zero()) {
        // Solve degreewise within the span.
        int dmin = 0, dmax = 0;
        for (const auto& [w, c] : rep.div_value.terms()) {
            const int d = static_cast<int>(w.size());
            if (dmin == 0 || d < dmin) dmin = d;
            dmax = std::max(dmax, d);
        }
        for (int d = dmin; d <= dmax; ++d) {
            CyclicPoly comp(rep.div_value.alph());
            for (const auto& [w, c] : rep.div_value.terms())
                if (static_cast<int>(w.size()) == d) comp.add_class(w, c);
            if (comp.is_zero()) continue;
            linalg::Subspace span = cyclic_span(d, with_xinf);
            linalg::Vec v = cyclic_to_vec(comp, d);
            if (!span.contains(v)) {
                rep.div_ok = false;
            } else {
                // Certificate: reduce against the span's echelon basis.
                linalg::Vec cert;
                linalg::Vec reduced = v;
                for (std::size_t i = 0; i < span.dim(); ++i) {
                    const Scalar f = reduced[span.pivots()[i]];
                    cert.push_back(f);
                    if (f == 0) continue;
                    for (std::size_t j = 0; j < reduced.size(); ++j)
                        reduced[j] -= f * span.basis().at(i, j);
                }
                for (const Scalar& c : cert) rep.span_certificate.push_back(c);
            }
        }
    }
    rep.pass = rep.special_ok && rep.div_ok && rep.theta_ok;
    return rep;
}

KrvReport krv_membership(const LieElement& psi, KrvKind kind, bool with_xinf) {
    return krv_membership(sd(psi), kind, with_xinf);
}

} // namespace dkpent::krv
