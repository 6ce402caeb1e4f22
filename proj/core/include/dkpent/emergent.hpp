#pragma once

#include "dkpent/necklace.hpp"
#include "dkpent/pentagon.hpp"

namespace dkpent::emergent {

using freelie::LieElement;
using ncalg::NCPoly;

// La : J/[J,J] -> k<X> on fiber coordinates over (t14, t24, t34):
// ad_{f(t14,t24)}(t34) -> f(x0, x1).  The input must lie in the ideal
// (t34); forward direction reports Lazard coordinates.
NCPoly la_iso(const LieElement& e_fiber4);
// Inverse: word w -> ad_w(t34), extended linearly (a choice of
// representative modulo [J, J]).
LieElement la_inverse(const NCPoly& p);

enum class PentVariant { T13T23, T12T23 };

// Closed form of La o pent^1_krv:
//   (dR_1 psi)(x0+x1, 0) - dR_1(psi) - (dR_1 psi)(x1, 0) - mu(psi),
// with the T12T23 variant applying the same to psi(-x0-x1, x1).
NCPoly pent1_krv_closed(const LieElement& psi, PentVariant variant);

// Algebraic route: pent in t_4, fiber coordinates in ker pr^4_4, Lazard
// reduction mod [J, J], then La.
NCPoly pent1_krv_route(const LieElement& psi, PentVariant variant);

// One-variable polynomials f(x) are encoded as NCPoly over the one-letter
// alphabet {x}.
ncalg::AlphabetPtr kx_alphabet();
NCPoly delta0(const NCPoly& f);    // x0 f(x0+x1) - x0 f(x0)
NCPoly delta1(const NCPoly& f);    // x1 f(x0+x1) - x1 f(x1)
NCPoly delta_sym(const NCPoly& f); // (x0+x1) f(x0+x1) - x0 f(x0) - x1 f(x1)

// (-)^ab_J : psi -> psi(t24, t34) in W_J; returns f with the W_J class
// f(ad_{t24}) t34, and throws if the image leaves W_J.
NCPoly ab_j(const LieElement& psi);

enum class PentTilde { One, Zero, Sym };

// pent~_1 = x1 . La o pent^1_krv - delta_1 o ab_J;
// pent~_0 = sigma_{0,1}(x1 . La o pent^1_krv) - delta_0 o ab_J;
// pent~_sym = pent~_0 + pent~_1.
NCPoly pent_tilde(const LieElement& psi, PentTilde which);

struct GrtEmReport {
    bool pass = false;
    NCPoly eq1a, eq1b; // defects of the two emergent equations
    LieElement eq2;    // defect of [x, psi(y,x)] + [y, psi(x,y)]
};

GrtEmReport grt_em_membership(const LieElement& psi);

struct KrvAuditRow {
    int weight = 0;
    std::size_t dim_a = 0, dim_b = 0, dim_c = 0;
    bool a_equals_b = false;
    bool c_in_b = false;
    bool with_xinf = false; // CyclicSpan convention that was used
};

// A = Sol(first th:krv equation + pent^1_krv), B = the krv^sym membership
// space, C = Sol(dmr0) within Sol(first equation).  The span convention is
// chosen per weight as the one achieving A = B (both are computed).
KrvAuditRow krv_equivalence_audit(int weight);

// Subspace of L_w(x,y): those phi with sd(phi) in krv^sym under the given
// span convention (exact linear solve).
linalg::Subspace krv_sym_space(int weight, bool with_xinf);

// All six 4T relations of dk_{2,2} evaluated in the combed t_4 model.
bool check_4t_relations();

// U(dk_{2,2})/(t34) ~ k<x,y> (x) k<x,y>: image of pent(phi(-t13-t23, t23))
// for an associative phi; zero iff phi is a Lie series (primitivity).
ncalg::TensorPoly u_quotient_pent(const NCPoly& phi_xy);

} // namespace dkpent::emergent
