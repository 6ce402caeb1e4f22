#pragma once

#include "dkpent/lie.hpp"

namespace dkpent::krv {

using freelie::LieElement;
using ncalg::CyclicPoly;
using ncalg::NCPoly;

// Tangential derivation u = (a0, a1) of k<x0,x1>: u(x0) = [x0, a0],
// u(x1) = [x1, a1].
struct TangentialDerivation {
    NCPoly a0, a1;

    TangentialDerivation();
    TangentialDerivation(NCPoly a0_, NCPoly a1_);

    bool is_zero() const { return a0.is_zero() && a1.is_zero(); }
    TangentialDerivation& operator+=(const TangentialDerivation& o);
    TangentialDerivation& operator-=(const TangentialDerivation& o);
    TangentialDerivation& operator*=(const Scalar& c);
    friend TangentialDerivation operator+(TangentialDerivation a, const TangentialDerivation& b) {
        a += b;
        return a;
    }
    friend TangentialDerivation operator-(TangentialDerivation a, const TangentialDerivation& b) {
        a -= b;
        return a;
    }
    friend TangentialDerivation operator*(TangentialDerivation a, const Scalar& c) {
        a *= c;
        return a;
    }
    bool operator==(const TangentialDerivation& o) const { return a0 == o.a0 && a1 == o.a1; }
};

using TDer = TangentialDerivation;

// Derivation applied to a polynomial (Leibniz over letters).
NCPoly apply(const TDer& u, const NCPoly& p);
CyclicPoly apply(const TDer& u, const CyclicPoly& c);

// [u, v] = (u(b0) - v(a0) + [a0, b0], u(b1) - v(a1) + [a1, b1]).
TDer tder_bracket(const TDer& u, const TDer& v);

// Speciality: u(-x0-x1) = 0, i.e. [x0, a0] + [x1, a1] = 0.
bool is_special(const TDer& u);
NCPoly special_defect(const TDer& u);

// sd(psi) = (psi(-x0-x1, x0), psi(-x0-x1, x1)).
TDer sd(const LieElement& psi);

// Letter swap x0 <-> x1 on polynomials and its conjugation on derivations:
// Theta(u) = (sigma(a1), sigma(a0)).
NCPoly sigma01(const NCPoly& p);
TDer theta(const TDer& u);
bool is_theta_invariant(const TDer& u);

// psi lies in L^sym iff sd(psi) is special.
bool in_l_sym(const LieElement& psi);

// div(u) = |x0 dR0(a0) + x1 dR1(a1)|.
CyclicPoly divergence(const TDer& u);

// Inverse of sd where defined; throws NotInImage otherwise.
struct NotInImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};
LieElement sd_inverse(const TDer& u);

// Ihara bracket on L^sym, realized as sd^{-1}([sd(psi1), sd(psi2)]).
LieElement ihara_bracket(const LieElement& psi1, const LieElement& psi2);

} // namespace dkpent::krv
