#include "dkpent/johnson.hpp"

#include "dkpent/comb.hpp"
#include "dkpent/subspace.hpp"

#include <stdexcept>

namespace dkpent::braids {

FreeGroupWord braid_act_on_fiber(const BraidWord& g, const FreeGroupWord& a) {
    BraidWord conj = compose(compose(g, fiber_embed(a, g.n)), inverse(g));
    return comb_to_free(conj);
}

FreeGroupWord johnson_commutator(const BraidWord& g, const FreeGroupWord& a) {
    return fg_mul(braid_act_on_fiber(g, a), fg_inverse(a));
}

JohnsonClass johnson_class(const BraidWord& g, const FreeGroupWord& a, int truncation) {
    JohnsonClass out;
    const int rank = g.n - 1;
    MagnusSeries m = magnus(johnson_commutator(g, a), rank, truncation);
    out.leading = leading_degree(m);
    if (out.leading < 0) return out;
    out.leading_poly = leading_term(m);
    freelie::LieNormalForm nf = freelie::lie_normal_form(out.leading_poly);
    out.lie_leading = nf.ok;
    if (nf.ok && g.n == 4) {
        auto wj = dkho::wj_alphabet();
        freelie::LieElement relabeled(wj);
        for (const auto& [lw, c] : nf.element.coords()) relabeled.add_coord(lw, c);
        linalg::Subspace brun = dkho::tn_subspace(4, dkho::SubSpec::brun(), out.leading);
        out.leading_in_brun = brun.contains(dkho::tn_to_vec(dkho::from_fiber(relabeled, 4), out.leading));
    }
    return out;
}

bool cocycle_check(const BraidWord& g, const FreeGroupWord& a, const FreeGroupWord& b, int truncation) {
    const int rank = g.n - 1;
    auto d0 = [&](const FreeGroupWord& w) {
        MagnusSeries m = magnus(johnson_commutator(g, w), rank, truncation);
        m.poly.add_term({}, -1);
        return m;
    };
    MagnusSeries lhs = d0(fg_mul(a, b));
    MagnusSeries rhs = d0(a);
    MagnusSeries twisted = magnus_conjugate(d0(b), magnus(a, rank, truncation));
    rhs.poly += twisted.poly;
    return lhs == rhs;
}

bool compatibility_check(const BraidWord& g, const FreeGroupWord& a, const FreeGroupWord& b,
                         int truncation) {
    const int rank = g.n - 1;
    auto d = [&](const FreeGroupWord& w) {
        MagnusSeries m = magnus(johnson_commutator(g, w), rank, truncation);
        m.poly.add_term({}, -1);
        return m;
    };
    FreeGroupWord ab = fg_conjugate(b, a);
    MagnusSeries lhs = d(ab);

    MagnusSeries d0a = d(a);
    MagnusSeries mab = magnus(ab, rank, truncation);
    mab.poly.add_term({}, -1);
    ncalg::NCPoly bracket_part = ncalg::commutator(d0a.poly, mab.poly);
    MagnusSeries twisted = magnus_conjugate(d(b), magnus(a, rank, truncation));
    ncalg::NCPoly rhs_poly = bracket_part + twisted.poly;

    // The graded identity holds modulo deeper filtration terms; compare the
    // smallest degree where either side is visible.
    ncalg::NCPoly diffable = lhs.poly;
    int dl = diffable.min_degree();
    int dr = rhs_poly.min_degree();
    if (dl < 0 && dr < 0) return true;
    int deg = dl < 0 ? dr : (dr < 0 ? dl : std::min(dl, dr));
    if (deg > truncation) return true;
    return lhs.poly.homogeneous_part(deg) == rhs_poly.homogeneous_part(deg);
}

EgDerivation eg_bracket(const EgDerivation& d, const EgDerivation& e) {
    EgDerivation r;
    r.m = d.m + e.m;
    auto dm = d.map;
    auto em = e.map;
    r.map = [dm, em](const freelie::LieElement& a) { return dm(em(a)) - em(dm(a)); };
    return r;
}

EgDerivation tau(const BraidWord& g, int m, int truncation) {
    EgDerivation out;
    out.m = m;
    const int n = g.n;
    BraidWord gg = g;
    out.map = [gg, m, truncation, n](const freelie::LieElement& x) {
        // Realize x through representative fiber words of its Lyndon
        // bracketings, apply [g, -], and collect graded degree shift m.
        auto alph = x.alph();
        freelie::LieElement acc(alph);
        for (const auto& [w, c] : x.coords()) {
            // Integer multiple only: scale the class afterwards.
            std::function<FreeGroupWord(const ncalg::Word&)> realize =
                [&](const ncalg::Word& lw) -> FreeGroupWord {
                if (lw.size() == 1) return FreeGroupWord{static_cast<int>(lw[0]) + 1};
                auto [u, v] = freelie::standard_factorization(lw);
                FreeGroupWord fu = realize(u), fv = realize(v);
                return fg_mul(fg_mul(fu, fv), fg_mul(fg_inverse(fu), fg_inverse(fv)));
            };
            FreeGroupWord wx = realize(w);
            MagnusSeries s = magnus(johnson_commutator(gg, wx), n - 1, truncation);
            s.poly.add_term({}, -1);
            const int target = static_cast<int>(w.size()) + m;
            ncalg::NCPoly part = s.poly.homogeneous_part(target);
            if (part.is_zero()) continue;
            freelie::LieNormalForm nf = freelie::lie_normal_form(part);
            if (!nf.ok) throw std::runtime_error("tau: graded class is not a Lie element");
            freelie::LieElement lifted(alph);
            for (const auto& [lw2, c2] : nf.element.coords()) lifted.add_coord(lw2, c2);
            acc += lifted * c;
        }
        return acc;
    };
    return out;
}

} // namespace dkpent::braids
