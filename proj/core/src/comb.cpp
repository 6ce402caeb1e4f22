#include "dkpent/comb.hpp"

#include <stdexcept>

namespace dkpent::braids {

BraidWord fiber_generator(int n, int q) {
    // lambda_q = R_{q+1}^{-1} sigma_q^2 R_{q+1}, R_p = sigma_p ... sigma_{n-1}
    // (the last strand slides in front of everything).
    if (q < 1 || q > n - 1) throw std::invalid_argument("fiber generator index out of range");
    BraidWord r;
    r.n = n;
    for (int j = n - 1; j > q; --j) r.word.push_back({j, -1});
    r.word.push_back({q, 1});
    r.word.push_back({q, 1});
    for (int j = q + 1; j <= n - 1; ++j) r.word.push_back({j, 1});
    return r;
}

BraidWord fiber_embed(const FreeGroupWord& w, int n) {
    BraidWord r;
    r.n = n;
    for (int g : w) {
        BraidWord gen = fiber_generator(n, g > 0 ? g : -g);
        if (g < 0) gen = inverse(gen);
        r = compose(r, gen);
    }
    return r;
}

bool same_braid(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) return false;
    return is_trivial(compose(a, inverse(b)));
}

FreeGroupWord comb_to_free(const BraidWord& b) {
    const int n = b.n;
    if (!is_pure(b)) throw std::invalid_argument("comb_to_free expects a pure braid");
    if (!is_trivial(delete_strand(b, n)))
        throw std::invalid_argument("comb_to_free: last-strand deletion is not trivial");

    // Scan the word tracking the last strand.  A crossing where it passes
    // behind a neighbor contributes the loop y_j^{+-1} around deleted
    // position j, conjugated by the Artin action of the deletion prefix.
    FreeGroupWord out;
    BraidWord prefix; // deletion image accumulated so far (n-1 strands)
    prefix.n = n - 1;
    int p = n;
    for (const Crossing& c : b.word) {
        const int j = c.index;
        if (p != j && p != j + 1) {
            prefix.word.push_back({j > p ? j - 1 : j, c.sign});
            continue;
        }
        int exponent = 0;
        if (p == j) {
            if (c.sign < 0) exponent = -1; // tracked strand passes behind
            p = j + 1;
        } else {
            if (c.sign > 0) exponent = 1;
            p = j;
        }
        if (exponent != 0) {
            FreeGroupWord letter{exponent > 0 ? j : -j};
            out = fg_mul(out, artin_action(prefix, letter));
        }
    }
    return out;
}

} // namespace dkpent::braids
