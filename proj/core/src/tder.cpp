#include "dkpent/tder.hpp"

namespace dkpent::krv {

TangentialDerivation::TangentialDerivation() : a0(ncalg::x_alphabet()), a1(ncalg::x_alphabet()) {}

TangentialDerivation::TangentialDerivation(NCPoly a0_, NCPoly a1_) : a0(std::move(a0_)), a1(std::move(a1_)) {
    if (a0.alph() != ncalg::x_alphabet() || a1.alph() != ncalg::x_alphabet())
        throw std::invalid_argument("tangential derivations live over {x0, x1}");
}

TangentialDerivation& TangentialDerivation::operator+=(const TangentialDerivation& o) {
    a0 += o.a0;
    a1 += o.a1;
    return *this;
}

TangentialDerivation& TangentialDerivation::operator-=(const TangentialDerivation& o) {
    a0 -= o.a0;
    a1 -= o.a1;
    return *this;
}

TangentialDerivation& TangentialDerivation::operator*=(const Scalar& c) {
    a0 *= c;
    a1 *= c;
    return *this;
}

NCPoly apply(const TDer& u, const NCPoly& p) {
    auto x = ncalg::x_alphabet();
    NCPoly im0 = ncalg::commutator(NCPoly::letter(x, 0), u.a0);
    NCPoly im1 = ncalg::commutator(NCPoly::letter(x, 1), u.a1);
    NCPoly out(x);
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const NCPoly& im = w[i] == 0 ? im0 : im1;
            for (const auto& [iw, ic] : im.terms()) {
                ncalg::Word nw;
                nw.reserve(w.size() + iw.size());
                nw.insert(nw.end(), w.begin(), w.begin() + i);
                nw.insert(nw.end(), iw.begin(), iw.end());
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                out.add_term(nw, c * ic);
            }
        }
    }
    return out;
}

CyclicPoly apply(const TDer& u, const CyclicPoly& c) {
    CyclicPoly out(c.alph());
    for (const auto& [w, v] : c.terms()) {
        NCPoly img = apply(u, NCPoly(c.alph(), w, v));
        out += ncalg::cyclic_project(img);
    }
    return out;
}

TDer tder_bracket(const TDer& u, const TDer& v) {
    NCPoly c0 = apply(u, v.a0) - apply(v, u.a0) + ncalg::commutator(u.a0, v.a0);
    NCPoly c1 = apply(u, v.a1) - apply(v, u.a1) + ncalg::commutator(u.a1, v.a1);
    return TDer(std::move(c0), std::move(c1));
}

NCPoly special_defect(const TDer& u) {
    auto x = ncalg::x_alphabet();
    return ncalg::commutator(NCPoly::letter(x, 0), u.a0) + ncalg::commutator(NCPoly::letter(x, 1), u.a1);
}

bool is_special(const TDer& u) { return special_defect(u).is_zero(); }

TDer sd(const LieElement& psi) {
    auto x = ncalg::x_alphabet();
    NCPoly x0 = NCPoly::letter(x, 0);
    NCPoly x1 = NCPoly::letter(x, 1);
    NCPoly xoo = -(x0 + x1);
    NCPoly p = freelie::to_ncpoly(psi);
    return TDer(ncalg::subst_assoc(p, {xoo, x0}), ncalg::subst_assoc(p, {xoo, x1}));
}

NCPoly sigma01(const NCPoly& p) {
    NCPoly r(p.alph());
    for (const auto& [w, c] : p.terms()) {
        ncalg::Word sw;
        sw.reserve(w.size());
        for (ncalg::Letter l : w) sw.push_back(l == 0 ? 1 : 0);
        r.add_term(sw, c);
    }
    return r;
}

TDer theta(const TDer& u) { return TDer(sigma01(u.a1), sigma01(u.a0)); }

bool is_theta_invariant(const TDer& u) { return theta(u) == u; }

bool in_l_sym(const LieElement& psi) { return is_special(sd(psi)); }

CyclicPoly divergence(const TDer& u) {
    auto x = ncalg::x_alphabet();
    NCPoly inner = NCPoly::letter(x, 0) * ncalg::d_right(u.a0, 0) + NCPoly::letter(x, 1) * ncalg::d_right(u.a1, 1);
    return ncalg::cyclic_project(inner);
}

LieElement sd_inverse(const TDer& u) {
    // sd(psi).a0 = psi(-x0-x1, x0); invert the substitution with
    // (x0, x1) -> (x1, -x0-x1).
    auto x = ncalg::x_alphabet();
    NCPoly x0 = NCPoly::letter(x, 0);
    NCPoly x1 = NCPoly::letter(x, 1);
    NCPoly cand_nc = ncalg::subst_assoc(u.a0, {x1, -(x0 + x1)});
    freelie::LieNormalForm nf = freelie::lie_normal_form(cand_nc);
    if (!nf.ok) throw NotInImage("sd_inverse: first component is not a Lie series");
    if (!(sd(nf.element) == u)) throw NotInImage("sd_inverse: pair is not in the image of sd");
    return nf.element;
}

LieElement ihara_bracket(const LieElement& psi1, const LieElement& psi2) {
    return sd_inverse(tder_bracket(sd(psi1), sd(psi2)));
}

} // namespace dkpent::krv
