#pragma once

#include "dkpent/ncpoly.hpp"

#include <vector>

namespace dkpent::dmr {

// Composition (a_1,...,a_k) of positive integers; weight = sum, depth = k,
// admissible iff a_k > 1.
using Composition = std::vector<int>;

int weight(const Composition& a);
int depth(const Composition& a);
bool admissible(const Composition& a);

// The composition (a_1,...,a_k) corresponds to the word
// y_{a_k} y_{a_{k-1}} ... y_{a_1} (and to x0^{a_k-1} x1 ... x0^{a_1-1} x1).
ncalg::Word to_y_word(const Composition& a);
Composition from_y_word(const ncalg::Word& w);
ncalg::Word to_x_word(const Composition& a);

std::vector<Composition> compositions_of(int weight);

// Stuffle product via the surjections of Sh^{<=(k,l)}, grouped by the class
// of sigma^{-1}(N): both last entries merged (single composition), the last
// entry of b on top (pair, (x,y) order) or the last entry of a on top (pair,
// (y,x) order).
struct StuffleResult {
    std::vector<std::pair<Composition, int>> merged;                      // sigma^{-1}(N) = {k, k+l}
    std::vector<std::pair<std::pair<Composition, Composition>, int>> xy;  // sigma^{-1}(N) = {k+l}
    std::vector<std::pair<std::pair<Composition, Composition>, int>> yx;  // sigma^{-1}(N) = {k}
};

StuffleResult stuffle_product(const Composition& a, const Composition& b);

// All classes collapsed to plain compositions (the one-variable pairing).
std::vector<std::pair<Composition, int>> stuffle_collapsed(const Composition& a, const Composition& b);

} // namespace dkpent::dmr
