#include "dkpent/emergent.hpp"

#include "dkpent/ymaps.hpp"

#include <stdexcept>

namespace dkpent::emergent {

namespace {

ncalg::NCPoly to_x(const ncalg::NCPoly& p) {
    ncalg::NCPoly r(ncalg::x_alphabet());
    for (const auto& [w, c] : p.terms()) r.add_term(w, c);
    return r;
}

LieElement as_xy(const LieElement& e) {
    if (e.alph() && e.alph()->size() != 2) throw std::invalid_argument("expected a two-letter element");
    return e;
}

} // namespace

NCPoly la_iso(const LieElement& e_fiber4) {
    if (e_fiber4.alph() != dkho::wj_alphabet())
        throw std::invalid_argument("la_iso expects fiber coordinates over (t14, t24, t34)");
    freelie::LazardSplit split = freelie::lazard_split(e_fiber4);
    if (!split.outer.is_zero())
        throw std::invalid_argument("la_iso: element is not in the ideal (t34)");
    NCPoly r(ncalg::x_alphabet());
    for (const auto& [w, c] : split.ideal_coords) r.add_term(w, c); // t14 -> x0, t24 -> x1
    return r;
}

LieElement la_inverse(const NCPoly& p) {
    auto wj = dkho::wj_alphabet();
    LieElement r(wj);
    for (const auto& [w, c] : p.terms()) r += freelie::ad_word(wj, w) * c; // letters keep indices
    return r;
}

NCPoly pent1_krv_closed(const LieElement& psi, PentVariant variant) {
    auto x = ncalg::x_alphabet();
    NCPoly p = to_x(freelie::to_ncpoly(as_xy(psi)));
    if (variant == PentVariant::T12T23) {
        NCPoly x0 = NCPoly::letter(x, 0), x1 = NCPoly::letter(x, 1);
        p = ncalg::subst_assoc(p, {-(x0 + x1), x1});
    }
    NCPoly x0 = NCPoly::letter(x, 0), x1 = NCPoly::letter(x, 1), zero(x);
    NCPoly d1 = ncalg::d_right(p, 1);
    return ncalg::subst_assoc(d1, {x0 + x1, zero}) - d1 - ncalg::subst_assoc(d1, {x1, zero}) -
           ncalg::reduced_coaction(p);
}

NCPoly pent1_krv_route(const LieElement& psi, PentVariant variant) {
    dkho::CombedLie g3 = dkho::phi_in_t3(as_xy(psi), variant == PentVariant::T13T23);
    dkho::CombedLie value = pentagon::pent_eval(g3);
    return la_iso(dkho::fiber_coords(value, 4));
}

ncalg::AlphabetPtr kx_alphabet() { return ncalg::alphabet({"x"}); }

namespace {

// f(x) evaluated at an argument polynomial: x^n -> arg^n.
NCPoly eval_poly(const NCPoly& f, const NCPoly& arg) {
    if (f.alph() != kx_alphabet()) throw std::invalid_argument("expected a k[x] polynomial");
    return ncalg::subst_assoc(f, {arg});
}

} // namespace

NCPoly delta0(const NCPoly& f) {
    auto x = ncalg::x_alphabet();
    NCPoly x0 = NCPoly::letter(x, 0), x1 = NCPoly::letter(x, 1);
    return x0 * eval_poly(f, x0 + x1) - x0 * eval_poly(f, x0);
}

NCPoly delta1(const NCPoly& f) {
    auto x = ncalg::x_alphabet();
    NCPoly x0 = NCPoly::letter(x, 0), x1 = NCPoly::letter(x, 1);
    return x1 * eval_poly(f, x0 + x1) - x1 * eval_poly(f, x1);
}

NCPoly delta_sym(const NCPoly& f) { return delta0(f) + delta1(f); }

NCPoly ab_j(const LieElement& psi) {
    auto wj = dkho::wj_alphabet();
    LieElement img = freelie::substitute(
        as_xy(psi), {LieElement::generator(wj, 1), LieElement::generator(wj, 2)}); // (t24, t34)
    freelie::LazardSplit split = freelie::lazard_split(img);
    if (!split.outer.is_zero()) throw std::domain_error("ab_J: image has an outer component");
    NCPoly f(kx_alphabet());
    for (const auto& [w, c] : split.ideal_coords) {
        for (ncalg::Letter l : w)
            if (l != 1) throw std::domain_error("ab_J: image leaves W_J (residual off the ad(t24) line)");
        f.add_term(ncalg::Word(w.size(), 0), c);
    }
    return f;
}

NCPoly pent_tilde(const LieElement& psi, PentTilde which) {
    auto x = ncalg::x_alphabet();
    NCPoly x1 = NCPoly::letter(x, 1);
    NCPoly la = pent1_krv_closed(psi, PentVariant::T13T23);
    NCPoly f = ab_j(psi);
    NCPoly p1 = x1 * la - delta1(f);
    if (which == PentTilde::One) return p1;
    NCPoly p0 = krv::sigma01(x1 * la) - delta0(f);
    if (which == PentTilde::Zero) return p0;
    return p0 + p1;
}

GrtEmReport grt_em_membership(const LieElement& psi) {
    GrtEmReport rep;
    auto a = psi.alph();
    NCPoly p = freelie::to_ncpoly(psi);
    NCPoly x = NCPoly::letter(a, 0), y = NCPoly::letter(a, 1), zero(a);
    rep.eq1a = ncalg::subst_assoc(p, {y, zero}) - ncalg::subst_assoc(p, {x + y, zero});
    NCPoly dy = ncalg::d_right(p, 1);
    rep.eq1b = ncalg::subst_assoc(dy, {x, y}) + ncalg::subst_assoc(dy, {y, zero}) -
               ncalg::subst_assoc(dy, {x + y, zero}) - ncalg::reduced_coaction(p);
    LieElement gx = LieElement::generator(a, 0), gy = LieElement::generator(a, 1);
    rep.eq2 = freelie::bracket(gx, freelie::substitute(psi, {gy, gx})) +
              freelie::bracket(gy, freelie::substitute(psi, {gx, gy}));
    rep.pass = rep.eq1a.is_zero() && rep.eq1b.is_zero() && rep.eq2.is_zero();
    return rep;
}

namespace {

LieElement krv_eq1_defect(const LieElement& phi) {
    auto a = phi.alph();
    LieElement x0 = LieElement::generator(a, 0), x1 = LieElement::generator(a, 1);
    LieElement xoo = -(x0 + x1);
    return freelie::bracket(x0, freelie::substitute(phi, {xoo, x0})) +
           freelie::bracket(x1, freelie::substitute(phi, {xoo, x1}));
}

linalg::Subspace eq1_kernel(int weight) {
    auto xy = ncalg::xy_alphabet();
    std::vector<ncalg::Word> basis = freelie::lyndon_basis(xy, weight);
    const std::size_t rows_dim = freelie::lyndon_basis(xy, weight + 1).size();
    linalg::Matrix m(rows_dim, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        LieElement phi(xy);
        phi.add_coord(basis[j], 1);
        linalg::Vec col = freelie::lie_to_vec(krv_eq1_defect(phi), weight + 1);
        for (std::size_t i = 0; i < rows_dim; ++i) m.at(i, j) = col[i];
    }
    return linalg::Subspace(basis.size(), linalg::kernel(m));
}

} // namespace

linalg::Subspace krv_sym_space(int weight, bool with_xinf) {
    auto xy = ncalg::xy_alphabet();
    std::vector<ncalg::Word> basis = freelie::lyndon_basis(xy, weight);
    linalg::Subspace span = krv::cyclic_span(weight + 1, with_xinf);
    std::vector<linalg::Vec> cols;
    for (const auto& w : basis) {
        LieElement phi(xy);
        phi.add_coord(w, 1);
        krv::TDer u = krv::sd(phi);
        linalg::Vec col = freelie::lie_to_vec(krv_eq1_defect(phi), weight + 1);
        // Theta-invariance of sd images is automatic; the remaining condition
        // is div(u) modulo the cyclic span.
        linalg::Vec residual = span.reduce(krv::cyclic_to_vec(krv::divergence(u), weight + 1));
        col.insert(col.end(), residual.begin(), residual.end());
        cols.push_back(std::move(col));
    }
    const std::size_t nrows = cols.empty() ? 0 : cols[0].size();
    linalg::Matrix m(nrows, basis.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i];
    return linalg::Subspace(basis.size(), linalg::kernel(m));
}

KrvAuditRow krv_equivalence_audit(int weight) {
    KrvAuditRow row;
    row.weight = weight;
    linalg::Subspace a = pentagon::solve_space(pentagon::System::KrvSymPair, weight);
    linalg::Subspace b_with = krv_sym_space(weight, true);
    linalg::Subspace b_without = krv_sym_space(weight, false);
    if (a == b_with) {
        row.with_xinf = true;
        row.a_equals_b = true;
    } else if (a == b_without) {
        row.with_xinf = false;
        row.a_equals_b = true;
    } else {
        row.with_xinf = true;
        row.a_equals_b = false;
    }
    const linalg::Subspace& b = row.with_xinf ? b_with : b_without;
    linalg::Subspace c = pentagon::solve_space(pentagon::System::Dmr0, weight).intersect(eq1_kernel(weight));
    row.dim_a = a.dim();
    row.dim_b = b.dim();
    row.dim_c = c.dim();
    row.c_in_b = b.contains(c);
    return row;
}

bool check_4t_relations() {
    using dkho::CombedLie;
    auto g = [](int i, int j) { return CombedLie::generator(4, i, j); };
    auto br = [](const CombedLie& a, const CombedLie& b) { return dkho::bracket(a, b); };
    // Note: the relation [t24, t23] = -[t24, t34] is forced by
    // [t_ij, t_ik + t_jk] = 0; it mirrors [t14, t13] = -[t14, t34] under the
    // strand relabeling 1 -> 2.
    bool ok = true;
    ok &= br(g(1, 3), g(3, 4)) == br(g(3, 4), g(1, 4));
    ok &= br(g(2, 3), g(3, 4)) == br(g(3, 4), g(2, 4));
    ok &= br(g(1, 3), g(2, 4)).is_zero();
    ok &= br(g(1, 4), g(1, 3)) == -br(g(1, 4), g(3, 4));
    ok &= br(g(2, 4), g(2, 3)) == -br(g(2, 4), g(3, 4));
    ok &= br(g(1, 4), g(2, 3)).is_zero();
    return ok;
}

ncalg::TensorPoly u_quotient_pent(const NCPoly& phi_xy) {
    using ncalg::TensorPoly;
    auto xy = phi_xy.alph();
    TensorPoly x1(xy), y1(xy), x2(xy), y2(xy), zero(xy);
    x1.add_term(ncalg::Word{0}, {}, 1); // t14 -> x (x) 1
    y1.add_term(ncalg::Word{1}, {}, 1); // t24 -> y (x) 1
    x2.add_term({}, ncalg::Word{0}, 1); // t13 -> 1 (x) x
    y2.add_term({}, ncalg::Word{1}, 1); // t23 -> 1 (x) y

    auto eval = [&](const TensorPoly& u, const TensorPoly& v) {
        TensorPoly out(xy);
        for (const auto& [w, c] : phi_xy.terms()) {
            TensorPoly acc(xy);
            acc.add_term({}, {}, c);
            for (ncalg::Letter l : w) acc = acc * (l == 0 ? u : v);
            out += acc;
        }
        return out;
    };

    // Images of the five pentagon substitutions of (u, v) = (-t13-t23, t23)
    // under t14,t24,t13,t23 -> x(x)1, y(x)1, 1(x)x, 1(x)y and t34 -> 0.
    TensorPoly r = eval(zero - x2 - y2, y2);          // ^{1,2,3}
    r += eval(zero - x1 - y1, y1);                    // ^{1,23,4}
    r += eval(zero - y1, zero);                       // ^{2,3,4}
    r -= eval(zero - x1 - y1, zero);                  // ^{12,3,4}
    r -= eval(zero - x2 - x1 - y2 - y1, y2 + y1);     // ^{1,2,34}
    return r;
}

} // namespace dkpent::emergent
