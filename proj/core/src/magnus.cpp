#include "dkpent/magnus.hpp"

#include "dkpent/comb.hpp"
#include "dkpent/subspace.hpp"

#include <stdexcept>

namespace dkpent::braids {

ncalg::AlphabetPtr magnus_alphabet(int rank) {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back("X" + std::to_string(i));
    return ncalg::alphabet(names);
}

namespace {

ncalg::NCPoly truncate(const ncalg::NCPoly& p, int truncation) {
    ncalg::NCPoly r(p.alph());
    for (const auto& [w, c] : p.terms())
        if (static_cast<int>(w.size()) <= truncation) r.add_term(w, c);
    return r;
}

} // namespace

MagnusSeries magnus_one(int rank, int truncation) {
    MagnusSeries s;
    s.rank = rank;
    s.truncation = truncation;
    s.poly = ncalg::NCPoly::unit(magnus_alphabet(rank));
    return s;
}

MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.rank != b.rank || a.truncation != b.truncation)
        throw std::invalid_argument("magnus series mismatch");
    MagnusSeries s;
    s.rank = a.rank;
    s.truncation = a.truncation;
    s.poly = truncate(a.poly * b.poly, a.truncation);
    return s;
}

MagnusSeries magnus(const FreeGroupWord& w, int rank, int truncation) {
    auto alph = magnus_alphabet(rank);
    MagnusSeries acc = magnus_one(rank, truncation);
    for (int g : w) {
        const int k = g > 0 ? g : -g;
        if (k > rank) throw std::invalid_argument("letter exceeds rank");
        ncalg::NCPoly factor(alph);
        if (g > 0) {
            factor.add_term({}, 1);
            factor.add_term(ncalg::Word{static_cast<ncalg::Letter>(k - 1)}, 1);
        } else {
            // (1 + X)^{-1} = 1 - X + X^2 - ...
            ncalg::Word word;
            Scalar sign = 1;
            for (int d = 0; d <= truncation; ++d) {
                factor.add_term(word, sign);
                word.push_back(static_cast<ncalg::Letter>(k - 1));
                sign = -sign;
            }
        }
        acc.poly = truncate(acc.poly * factor, truncation);
    }
    return acc;
}

MagnusSeries magnus_conjugate(const MagnusSeries& a, const MagnusSeries& by) {
    // by a by^{-1} with by invertible (unit constant term).
    if (by.poly.coeff({}) != 1) throw std::invalid_argument("conjugator must have constant term 1");
    // Invert by Neumann series: (1 + N)^{-1} = sum (-N)^k.
    ncalg::NCPoly n = by.poly;
    n.add_term({}, -1);
    ncalg::NCPoly inv = ncalg::NCPoly::unit(by.poly.alph());
    ncalg::NCPoly pow = ncalg::NCPoly::unit(by.poly.alph());
    for (int k = 1; k <= by.truncation; ++k) {
        pow = truncate(pow * n, by.truncation);
        if (pow.is_zero()) break;
        inv += (k % 2 ? -pow : pow);
    }
    MagnusSeries s;
    s.rank = a.rank;
    s.truncation = a.truncation;
    s.poly = truncate(truncate(by.poly * a.poly, a.truncation) * inv, a.truncation);
    return s;
}

MagnusSeries magnus_delete(const MagnusSeries& s, int i) {
    MagnusSeries r;
    r.rank = s.rank - 1;
    r.truncation = s.truncation;
    r.poly = ncalg::NCPoly(magnus_alphabet(r.rank));
    for (const auto& [w, c] : s.poly.terms()) {
        ncalg::Word nw;
        bool killed = false;
        for (ncalg::Letter l : w) {
            const int j = static_cast<int>(l) + 1;
            if (j == i) {
                killed = true;
                break;
            }
            nw.push_back(static_cast<ncalg::Letter>(j > i ? j - 2 : j - 1));
        }
        if (!killed) r.poly.add_term(nw, c);
    }
    return r;
}

int leading_degree(const MagnusSeries& s) {
    ncalg::NCPoly rest = s.poly;
    rest.add_term({}, -s.poly.coeff({}));
    return rest.min_degree();
}

ncalg::NCPoly leading_term(const MagnusSeries& s) {
    const int d = leading_degree(s);
    if (d < 0) return ncalg::NCPoly(s.poly.alph());
    return s.poly.homogeneous_part(d);
}

TrivialityReport n_triviality_report(const BraidWord& pent, int truncation, std::vector<int> moving) {
    TrivialityReport rep;
    if (!is_pure(pent) || !is_trivial(delete_strand(pent, pent.n))) return rep;
    rep.defined = true;
    const int rank = pent.n - 1;
    FreeGroupWord w = comb_to_free(pent);
    MagnusSeries m = magnus(w, rank, truncation);
    rep.leading = leading_degree(m);
    if (rep.leading < 0) {
        // Either trivial or deeper than the truncation sees.
        rep.saturated = !w.empty() && !is_trivial(pent);
        return rep;
    }
    rep.leading_poly = leading_term(m);

    if (moving.empty())
        for (int i = 1; i <= rank; ++i) moving.push_back(i);
    rep.in_deletion_kernels = true;
    for (int i : moving) {
        MagnusSeries del = magnus_delete(m, i);
        ncalg::NCPoly lead = del.poly.homogeneous_part(rep.leading);
        if (!lead.is_zero()) rep.in_deletion_kernels = false;
    }

    // Cross-module check: the leading term of a lower-central element is a
    // Lie element; in fiber coordinates (X1, X2, X3) = (t14, t24, t34) it
    // should land in brun_4 at that degree when the braid is Brunnian.
    freelie::LieNormalForm nf = freelie::lie_normal_form(rep.leading_poly);
    rep.lie_leading = nf.ok;
    if (nf.ok && pent.n == 4) {
        auto wj = dkho::wj_alphabet();
        freelie::LieElement relabeled(wj);
        for (const auto& [lw, c] : nf.element.coords()) relabeled.add_coord(lw, c);
        dkho::CombedLie emb = dkho::from_fiber(relabeled, 4);
        linalg::Subspace brun = dkho::tn_subspace(4, dkho::SubSpec::brun(), rep.leading);
        rep.leading_in_brun = brun.contains(dkho::tn_to_vec(emb, rep.leading));
    }
    return rep;
}

} // namespace dkpent::braids
