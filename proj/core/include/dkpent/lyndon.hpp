#pragma once

#include "dkpent/ncpoly.hpp"

#include <vector>

namespace dkpent::freelie {

using ncalg::Letter;
using ncalg::Word;

bool is_lyndon(const Word& w);

// All words of the given length over {0,...,num_letters-1}, lexicographic.
std::vector<Word> all_words(std::size_t num_letters, int length);

// All Lyndon words of the given length over {0,...,num_letters-1}, in
// lexicographic order (Duval's generation).
std::vector<Word> lyndon_words(std::size_t num_letters, int length);

// Number of Lyndon words of the given length (Witt's formula).
long long witt_dimension(std::size_t num_letters, int length);

// Standard factorization w = uv of a Lyndon word of length >= 2: v is the
// longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

// Expansion of the standard bracketing of a Lyndon word into k<A>; the
// lexicographically smallest word of the support is w itself, coefficient 1.
ncalg::NCPoly expand_bracketing(const ncalg::AlphabetPtr& a, const Word& w);

// Dynkin map: theta(l_1...l_m) = [[l_1,l_2],...,l_m], extended linearly.
// A homogeneous p of degree m is a Lie element iff theta(p) = m p.
ncalg::NCPoly dynkin(const ncalg::NCPoly& p);

} // namespace dkpent::freelie
