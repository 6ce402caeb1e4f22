#pragma once

#include "dkpent/freegroup.hpp"

namespace dkpent::braids {

// For a pure braid whose last-strand deletion is trivial, its word in the
// free generators of the fiber ker(delete last strand); generator q is the
// loop of the last strand around the strand at position q.
FreeGroupWord comb_to_free(const BraidWord& b);

// The braid word of fiber generator q (n strands).
BraidWord fiber_generator(int n, int q);

// Braid realizing a fiber word.
BraidWord fiber_embed(const FreeGroupWord& w, int n);

// Artin-action equality test (faithfulness).
bool same_braid(const BraidWord& a, const BraidWord& b);

} // namespace dkpent::braids
