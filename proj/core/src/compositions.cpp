#include "dkpent/compositions.hpp"

#include <map>
#include <stdexcept>

namespace dkpent::dmr {

int weight(const Composition& a) {
    int w = 0;
    for (int x : a) w += x;
    return w;
}

int depth(const Composition& a) { return static_cast<int>(a.size()); }

bool admissible(const Composition& a) { return !a.empty() && a.back() > 1; }

ncalg::Word to_y_word(const Composition& a) {
    ncalg::Word w;
    w.reserve(a.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        if (*it < 1) throw std::invalid_argument("composition entries must be >= 1");
        w.push_back(static_cast<ncalg::Letter>(*it - 1));
    }
    return w;
}

Composition from_y_word(const ncalg::Word& w) {
    Composition a;
    a.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) a.push_back(static_cast<int>(*it) + 1);
    return a;
}

ncalg::Word to_x_word(const Composition& a) {
    ncalg::Word w;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        for (int i = 1; i < *it; ++i) w.push_back(0);
        w.push_back(1);
    }
    return w;
}

std::vector<Composition> compositions_of(int w) {
    std::vector<Composition> out;
    if (w == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= w; ++first)
        for (const Composition& rest : compositions_of(w - first)) {
            Composition c{first};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    return out;
}

namespace {

// Enumerates every sigma in Sh^{<=(k,l)} by filling positions N, N-1, ...
// with the last unused entry of a, of b, or their merge.  step_a / step_b
// record where a_k and b_l land, which determines the class and the pair
// split {j, N} = {sigma(k), sigma(k+l)}.
struct Enumerator {
    const Composition& a;
    const Composition& b;
    StuffleResult out;
    std::vector<int> top_down;
    int step_a = -1, step_b = -1;

    void place(int i, int j) {
        if (i == 0 && j == 0) {
            record();
            return;
        }
        const int step = static_cast<int>(top_down.size());
        if (i > 0) {
            const bool mark = (i == depth(a)) && step_a < 0;
            if (mark) step_a = step;
            top_down.push_back(a[i - 1]);
            place(i - 1, j);
            top_down.pop_back();
            if (mark) step_a = -1;
        }
        if (j > 0) {
            const bool mark = (j == depth(b)) && step_b < 0;
            if (mark) step_b = step;
            top_down.push_back(b[j - 1]);
            place(i, j - 1);
            top_down.pop_back();
            if (mark) step_b = -1;
        }
        if (i > 0 && j > 0) {
            const bool mark_a = (i == depth(a)) && step_a < 0;
            const bool mark_b = (j == depth(b)) && step_b < 0;
            if (mark_a) step_a = step;
            if (mark_b) step_b = step;
            top_down.push_back(a[i - 1] + b[j - 1]);
            place(i - 1, j - 1);
            top_down.pop_back();
            if (mark_a) step_a = -1;
            if (mark_b) step_b = -1;
        }
    }

    void record() {
        const int n = static_cast<int>(top_down.size());
        Composition c(top_down.rbegin(), top_down.rend());
        if (step_a == 0 && step_b == 0) {
            bump(out.merged, c);
            return;
        }
        if (step_b == 0) { // sigma^{-1}(N) = {k+l}: (x,y) pair split at sigma(k)
            const int split = n - step_a;
            bump_pair(out.xy, {Composition(c.begin(), c.begin() + split), Composition(c.begin() + split, c.end())});
            return;
        }
        const int split = n - step_b; // sigma^{-1}(N) = {k}: (y,x) pair split at sigma(k+l)
        bump_pair(out.yx, {Composition(c.begin(), c.begin() + split), Composition(c.begin() + split, c.end())});
    }

    static void bump(std::vector<std::pair<Composition, int>>& list, const Composition& c) {
        for (auto& [cc, m] : list)
            if (cc == c) {
                ++m;
                return;
            }
        list.emplace_back(c, 1);
    }

    static void bump_pair(std::vector<std::pair<std::pair<Composition, Composition>, int>>& list,
                          const std::pair<Composition, Composition>& p) {
        for (auto& [pp, m] : list)
            if (pp == p) {
                ++m;
                return;
            }
        list.emplace_back(p, 1);
    }
};

} // namespace

StuffleResult stuffle_product(const Composition& a, const Composition& b) {
    StuffleResult out;
    if (a.empty()) {
        if (!b.empty()) out.merged.emplace_back(b, 1); // l_empty *_s l_b = l_b
        return out;
    }
    if (b.empty()) {
        out.merged.emplace_back(a, 1);
        return out;
    }
    Enumerator e{a, b, {}, {}, -1, -1};
    e.place(depth(a), depth(b));
    return e.out;
}

std::vector<std::pair<Composition, int>> stuffle_collapsed(const Composition& a, const Composition& b) {
    StuffleResult r = stuffle_product(a, b);
    std::map<Composition, int> acc;
    for (const auto& [c, m] : r.merged) acc[c] += m;
    for (const auto& [p, m] : r.xy) {
        Composition c = p.first;
        c.insert(c.end(), p.second.begin(), p.second.end());
        acc[c] += m;
    }
    for (const auto& [p, m] : r.yx) {
        Composition c = p.first;
        c.insert(c.end(), p.second.begin(), p.second.end());
        acc[c] += m;
    }
    return {acc.begin(), acc.end()};
}

} // namespace dkpent::dmr
