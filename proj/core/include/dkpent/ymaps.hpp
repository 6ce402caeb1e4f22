#pragma once

#include "dkpent/compositions.hpp"
#include "dkpent/lie.hpp"

namespace dkpent::dmr {

using freelie::LieElement;
using ncalg::NCPoly;
using ncalg::TensorPoly;

// pi_Y : k<X> -> k<Y>.  Kills words ending in x0, rewrites the rest in
// y-blocks (x0^{n-1} x1 -> y_n), and fixes the unit.
NCPoly pi_y(const NCPoly& p);

// corr : x0^{n-1} x1 -> ((-1)^{n-1}/n) y_1^n, every other word (and 1) -> 0.
NCPoly corr(const NCPoly& p);

// psi_* = corr(psi) + pi_Y(psi).
NCPoly psi_star(const NCPoly& p);

// Embedding k<Y> -> k<X>, y_n -> x0^{n-1} x1.
NCPoly y_to_x(const NCPoly& yp);

// Stuffle coproduct: the algebra map with
// Delta_*(y_n) = y_n (x) 1 + 1 (x) y_n + sum_{n'+n''=n} y_{n'} (x) y_{n''}.
TensorPoly stuffle_coproduct(const NCPoly& yp);

struct Dmr0Report {
    bool pass = false;
    TensorPoly defect; // Delta_*(psi_*) - psi_* (x) 1 - 1 (x) psi_*
};

// Membership in dmr_0: psi Lie, homogeneous of degree >= 3.
Dmr0Report dmr0_membership(const LieElement& psi);

// Defect coordinates on pairs of nonempty Y-words of total weight `weight`
// (used by the solve-space assembly; no degree floor).
linalg::Vec dmr0_defect_vec(const LieElement& psi, int weight);
std::vector<std::pair<ncalg::Word, ncalg::Word>> y_pair_basis(int weight);

} // namespace dkpent::dmr
