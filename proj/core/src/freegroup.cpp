#include "dkpent/freegroup.hpp"

#include <stdexcept>

namespace dkpent::braids {

FreeGroupWord fg_reduce(FreeGroupWord w) {
    FreeGroupWord out;
    for (int g : w) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

FreeGroupWord fg_mul(const FreeGroupWord& a, const FreeGroupWord& b) {
    FreeGroupWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return fg_reduce(std::move(r));
}

FreeGroupWord fg_inverse(const FreeGroupWord& a) {
    FreeGroupWord r;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r.push_back(-*it);
    return r;
}

FreeGroupWord fg_conjugate(const FreeGroupWord& a, const FreeGroupWord& by) {
    return fg_mul(fg_mul(by, a), fg_inverse(by));
}

namespace {

// One crossing substitution applied to every letter.
FreeGroupWord apply_crossing(const Crossing& c, const FreeGroupWord& w) {
    FreeGroupWord out;
    const int i = c.index;
    auto push = [&out](std::initializer_list<int> gs) {
        for (int g : gs) {
            if (!out.empty() && out.back() == -g)
                out.pop_back();
            else
                out.push_back(g);
        }
    };
    for (int g : w) {
        const int k = g > 0 ? g : -g;
        if (c.sign > 0) {
            if (k == i)
                g > 0 ? push({i, i + 1, -i}) : push({i, -(i + 1), -i});
            else if (k == i + 1)
                g > 0 ? push({i}) : push({-i});
            else
                push({g});
        } else {
            if (k == i)
                g > 0 ? push({i + 1}) : push({-(i + 1)});
            else if (k == i + 1)
                g > 0 ? push({-(i + 1), i, i + 1}) : push({-(i + 1), -i, i + 1});
            else
                push({g});
        }
    }
    return out;
}

} // namespace

FreeGroupWord artin_action(const BraidWord& b, const FreeGroupWord& w) {
    // action(c_1 ... c_L) = phi_{c_1} o ... o phi_{c_L}: apply c_L first.
    FreeGroupWord cur = fg_reduce(w);
    for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) cur = apply_crossing(*it, cur);
    return cur;
}

std::vector<FreeGroupWord> artin_images(const BraidWord& b) {
    std::vector<FreeGroupWord> out;
    for (int k = 1; k <= b.n; ++k) out.push_back(artin_action(b, FreeGroupWord{k}));
    return out;
}

bool is_trivial(const BraidWord& b) {
    for (int k = 1; k <= b.n; ++k) {
        FreeGroupWord img = artin_action(b, FreeGroupWord{k});
        if (img.size() != 1 || img[0] != k) return false;
    }
    return true;
}

bool is_brunnian(const BraidWord& b, std::vector<int> moving) {
    if (!is_pure(b)) throw std::invalid_argument("is_brunnian expects a pure braid");
    if (moving.empty())
        for (int i = 1; i <= b.n; ++i) moving.push_back(i);
    for (int i : moving)
        if (!is_trivial(delete_strand(b, i))) return false;
    return true;
}

} // namespace dkpent::braids
