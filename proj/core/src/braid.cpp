#include "dkpent/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace dkpent::braids {

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("compose: strand-count mismatch");
    BraidWord r = a;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    return free_reduce(std::move(r));
}

BraidWord inverse(const BraidWord& a) {
    BraidWord r;
    r.n = a.n;
    r.fixed = a.fixed;
    for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) r.word.push_back({it->index, -it->sign});
    return r;
}

BraidWord free_reduce(BraidWord a) {
    std::vector<Crossing> out;
    for (const Crossing& c : a.word) {
        if (!out.empty() && out.back().index == c.index && out.back().sign == -c.sign)
            out.pop_back();
        else
            out.push_back(c);
    }
    a.word = std::move(out);
    return a;
}

std::vector<int> permutation(const BraidWord& a) {
    std::vector<int> at(a.n); // at[p-1] = strand currently at position p
    for (int p = 1; p <= a.n; ++p) at[p - 1] = p;
    for (const Crossing& c : a.word) std::swap(at[c.index - 1], at[c.index]);
    std::vector<int> perm(a.n);
    for (int p = 1; p <= a.n; ++p) perm[at[p - 1] - 1] = p;
    return perm;
}

bool is_pure(const BraidWord& a) {
    std::vector<int> p = permutation(a);
    for (int i = 1; i <= a.n; ++i)
        if (p[i - 1] != i) return false;
    return true;
}

BraidWord delete_strand(const BraidWord& a, int i) {
    if (i < 1 || i > a.n) throw std::invalid_argument("delete_strand: index out of range");
    BraidWord r;
    r.n = a.n - 1;
    r.fixed = a.fixed > 0 && i <= a.fixed ? a.fixed - 1 : a.fixed;
    int p = i;
    for (const Crossing& c : a.word) {
        const int j = c.index;
        if (p == j) {
            p = j + 1;
        } else if (p == j + 1) {
            p = j;
        } else {
            r.word.push_back({j > p ? j - 1 : j, c.sign});
        }
    }
    return free_reduce(std::move(r));
}

BraidWord double_strand(const BraidWord& a, int i) {
    if (i < 1 || i > a.n) throw std::invalid_argument("double_strand: index out of range");
    BraidWord r;
    r.n = a.n + 1;
    r.fixed = a.fixed > 0 && i <= a.fixed ? a.fixed + 1 : a.fixed;
    int p = i; // leftmost position of the cable
    for (const Crossing& c : a.word) {
        const int j = c.index;
        if (p == j) {
            // cable at (j, j+1), single strand at j+2 passes both
            r.word.push_back({j + 1, c.sign});
            r.word.push_back({j, c.sign});
            p = j + 1;
        } else if (p == j + 1) {
            // cable at (j+1, j+2), single strand at j passes both
            r.word.push_back({j, c.sign});
            r.word.push_back({j + 1, c.sign});
            p = j;
        } else {
            r.word.push_back({j > p ? j + 1 : j, c.sign});
        }
    }
    return r;
}

BraidWord shift_strands(const BraidWord& a, int by) {
    BraidWord r;
    r.n = a.n + by;
    r.fixed = a.fixed;
    for (const Crossing& c : a.word) r.word.push_back({c.index + by, c.sign});
    return r;
}

BraidWord append_trivial(const BraidWord& a, int count) {
    BraidWord r = a;
    r.n += count;
    return r;
}

BraidWord pent_braid(const BraidWord& phi) {
    if (phi.n != 3) throw std::invalid_argument("pent_braid expects a 3-strand braid");
    if (!is_pure(phi)) throw std::invalid_argument("pent_braid expects a pure braid");
    BraidWord r = shift_strands(phi, 1);                       // Phi^{2,3,4}
    r = compose(r, double_strand(phi, 2));                     // Phi^{1,23,4}
    r = compose(r, append_trivial(phi, 1));                    // Phi^{1,2,3}
    r = compose(r, inverse(double_strand(phi, 1)));            // (Phi^{12,3,4})^{-1}
    r = compose(r, inverse(double_strand(phi, 3)));            // (Phi^{1,2,34})^{-1}
    return r;
}

std::string braid_to_string(const BraidWord& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.word.size(); ++i) {
        if (i) os << " ";
        os << (a.word[i].sign > 0 ? "s" : "S") << a.word[i].index;
    }
    return os.str();
}

BraidWord braid_from_string(int n, const std::string& text) {
    BraidWord r;
    r.n = n;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
            throw std::invalid_argument("bad braid token: " + tok);
        int idx = std::stoi(tok.substr(1));
        if (idx < 1 || idx >= n) throw std::invalid_argument("crossing index out of range: " + tok);
        r.word.push_back({idx, tok[0] == 's' ? 1 : -1});
    }
    return r;
}

} // namespace dkpent::braids
