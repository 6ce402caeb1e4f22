#pragma once

#include "dkpent/magnus.hpp"

#include <functional>

namespace dkpent::braids {

// Conjugation action of a pure braid on the last-strand fiber:
// g . a = g a g^{-1}, returned as a fiber word.
FreeGroupWord braid_act_on_fiber(const BraidWord& g, const FreeGroupWord& a);

// [g, a] = (g . a) a^{-1} in the fiber.
FreeGroupWord johnson_commutator(const BraidWord& g, const FreeGroupWord& a);

struct JohnsonClass {
    int leading = -1; // graded degree, -1 when invisible at the truncation
    ncalg::NCPoly leading_poly;
    bool lie_leading = false;
    bool leading_in_brun = false;
};

// Graded class of [g, a] through the truncated Magnus oracle.
JohnsonClass johnson_class(const BraidWord& g, const FreeGroupWord& a, int truncation);

// d0(ab) = d0(a) + ^a(d0(b)) as truncated Magnus series, with
// d0(w) = M([g, w]) - 1 and ^a acting by M(a)-conjugation.  Exact at the
// truncation.
bool cocycle_check(const BraidWord& g, const FreeGroupWord& a, const FreeGroupWord& b, int truncation);

// d(^a b) = [d0(a), ^a b] + ^a(d(b)) compared at the smallest visible degree.
bool compatibility_check(const BraidWord& g, const FreeGroupWord& a, const FreeGroupWord& b,
                         int truncation);

// Truncated eg-derivation data of degree m: one linear map per graded piece,
// all stored as a single degree-shifting map on the ambient free Lie algebra.
// The bracket is the displayed commutator formula
// [d, d']_i = d_{deg d' + i} o d'_i - d'_{deg d + i} o d_i.
struct EgDerivation {
    int m = 0;
    std::function<freelie::LieElement(const freelie::LieElement&)> map;
};

EgDerivation eg_bracket(const EgDerivation& d, const EgDerivation& e);

// tau_m(g) packaged as an eg-derivation on fiber Lie elements via sampled
// Magnus classes: x -> leading part of M([g, w_x]) - 1 where w_x realizes x.
EgDerivation tau(const BraidWord& g, int m, int truncation);

} // namespace dkpent::braids
