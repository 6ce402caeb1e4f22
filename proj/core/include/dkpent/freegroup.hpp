#pragma once

#include "dkpent/braid.hpp"

#include <vector>

namespace dkpent::braids {

// Reduced word in a free group: entry +k is x_k, -k is x_k^{-1} (1-based).
using FreeGroupWord = std::vector<int>;

FreeGroupWord fg_reduce(FreeGroupWord w);
FreeGroupWord fg_mul(const FreeGroupWord& a, const FreeGroupWord& b);
FreeGroupWord fg_inverse(const FreeGroupWord& a);
FreeGroupWord fg_conjugate(const FreeGroupWord& a, const FreeGroupWord& by); // by a by^{-1}

// Artin action of a braid on F_n = <x_1..x_n>:
//   sigma_i : x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i.
// action(compose(a,b)) = action(a) o action(b).
FreeGroupWord artin_action(const BraidWord& b, const FreeGroupWord& w);

// Images of all generators; the braid is trivial iff all are fixed (the
// Artin representation is faithful).
std::vector<FreeGroupWord> artin_images(const BraidWord& b);
bool is_trivial(const BraidWord& b);

// Brunnian over the moving strands: deleting any one of them trivializes the
// braid.  moving = empty means all strands.
bool is_brunnian(const BraidWord& b, std::vector<int> moving = {});

} // namespace dkpent::braids
