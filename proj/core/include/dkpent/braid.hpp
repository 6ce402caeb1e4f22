#pragma once

#include <string>
#include <vector>

namespace dkpent::braids {

// sigma_{index}^{sign}, 1 <= index <= n-1, sign = +-1.
struct Crossing {
    int index = 0;
    int sign = 1;
    bool operator==(const Crossing& o) const { return index == o.index && sign == o.sign; }
};

// Braid word; word[0] is the first (topmost) crossing.  `fixed` marks the
// mixed partition: strands 1..fixed are the fixed ones.
struct BraidWord {
    int n = 0;
    std::vector<Crossing> word;
    int fixed = 0;

    bool operator==(const BraidWord& o) const { return n == o.n && word == o.word; }
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);

// Cancels adjacent sigma_i^{+1} sigma_i^{-1} pairs only.
BraidWord free_reduce(BraidWord a);

// perm[i-1] = ending position of the strand starting at position i.
std::vector<int> permutation(const BraidWord& a);
bool is_pure(const BraidWord& a);

// Deletes the strand starting at position i, with position tracking.
BraidWord delete_strand(const BraidWord& a, int i);

// Replaces the strand starting at position i by two parallel (zero-framed)
// strands.
BraidWord double_strand(const BraidWord& a, int i);

// Trivial strands prepended (shift) or appended.
BraidWord shift_strands(const BraidWord& a, int by);
BraidWord append_trivial(const BraidWord& a, int count);

// Pent(Phi) = Phi^{2,3,4} Phi^{1,23,4} Phi^{1,2,3} (Phi^{12,3,4})^{-1}
// (Phi^{1,2,34})^{-1} for a pure 3-braid Phi.
BraidWord pent_braid(const BraidWord& phi);

// Text form "s1 S2 s1": s = positive crossing, capital = inverse.
std::string braid_to_string(const BraidWord& a);
BraidWord braid_from_string(int n, const std::string& text);

} // namespace dkpent::braids
