#include "dkpent/homs.hpp"

#include <algorithm>
#include <stdexcept>

namespace dkpent::dkho {

CombedLie map_generators(const CombedLie& e, int target_n,
                         const std::function<CombedLie(int, int)>& images) {
    CombedLie r(target_n);
    for (const auto& [s, comp] : e.components()) {
        std::vector<CombedLie> letter_images;
        for (int k = 1; k < s; ++k) letter_images.push_back(images(k, s));
        r += freelie::substitute_hom(comp, letter_images,
                                     [](const CombedLie& a, const CombedLie& b) { return bracket(a, b); });
    }
    return r;
}

CombedLie pr(const CombedLie& e, int i) {
    const int n = e.n();
    if (i < 1 || i > n) throw std::invalid_argument("pr: strand index out of range");
    return map_generators(e, n - 1, [&](int a, int b) {
        if (a == i || b == i) return CombedLie(n - 1);
        int a2 = a > i ? a - 1 : a;
        int b2 = b > i ? b - 1 : b;
        return CombedLie::generator(n - 1, a2, b2);
    });
}

CombedLie apply_partial(const CombedLie& e, const PartialMap& f) {
    const int n = e.n();
    if (static_cast<int>(f.fibers.size()) != n)
        throw std::invalid_argument("partial map: need one fiber per target strand");
    return map_generators(e, f.m, [&](int a, int b) {
        CombedLie sum(f.m);
        for (int a2 : f.fibers[a - 1])
            for (int b2 : f.fibers[b - 1]) {
                if (a2 == b2) throw std::invalid_argument("partial map fibers overlap");
                sum += CombedLie::generator(f.m, a2, b2);
            }
        return sum;
    });
}

CombedLie relabel_strands(const CombedLie& e, const std::vector<int>& perm) {
    const int n = e.n();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("bad permutation");
    // g^f with f = perm^{-1} relabels t_{ij} -> t_{perm(i) perm(j)}.
    PartialMap f;
    f.m = n;
    f.fibers.assign(n, {});
    for (int k = 1; k <= n; ++k) f.fibers[k - 1] = {perm[k - 1]};
    return apply_partial(e, f);
}

PSphereElement::PSphereElement(CombedLie rep) : rep_(std::move(rep)) {
    // Normalize the degree-1 part against the center k.sum(t_ij).
    LieElement c2 = rep_.component(2);
    Scalar t12 = c2.coord(Word{0});
    if (t12 != 0) rep_ -= tn_center(rep_.n()) * t12;
}

PSphereElement& PSphereElement::operator+=(const PSphereElement& o) {
    *this = PSphereElement(rep_ + o.rep_);
    return *this;
}

PSphereElement& PSphereElement::operator-=(const PSphereElement& o) {
    *this = PSphereElement(rep_ - o.rep_);
    return *this;
}

PSphereElement& PSphereElement::operator*=(const Scalar& c) {
    *this = PSphereElement(rep_ * c);
    return *this;
}

PSphereElement K(const CombedLie& e) { return PSphereElement(e); }

PSphereElement spr(const PSphereElement& e, int i) {
    const int n = e.n(); // p_n, represented in t_{n-1}
    if (i < 1 || i > n) throw std::invalid_argument("spr: strand index out of range");
    if (i <= n - 1) return PSphereElement(pr(e.rep(), i));
    // Deleting the implicit last strand: t_{k,n-1} -> -sum_{j<=n-2, j!=k} t_{kj}.
    const int m = n - 2; // target is t_{n-2}
    return PSphereElement(map_generators(e.rep(), m, [&](int a, int b) {
        if (b <= m) return CombedLie::generator(m, a, b);
        // b == n-1
        CombedLie sum(m);
        for (int j = 1; j <= m; ++j)
            if (j != a) sum -= CombedLie::generator(m, a, j);
        return sum;
    }));
}

std::size_t pn_dim(int n, int degree) {
    std::size_t d = tn_dim(n - 1, degree);
    return degree == 1 ? d - 1 : d;
}

linalg::Vec pn_to_vec(const PSphereElement& e, int degree) {
    linalg::Vec full = tn_to_vec(e.rep(), degree);
    if (degree != 1) return full;
    // Degree 1: drop the t12 coordinate (always zero after normalization).
    return linalg::Vec(full.begin() + 1, full.end());
}

ncalg::AlphabetPtr t3_free_alphabet() { return ncalg::alphabet({"t12", "t23"}); }

T3CenterSplit t3_center_split(const CombedLie& g) {
    if (g.n() != 3) throw std::invalid_argument("t3_center_split needs a t_3 element");
    auto a2 = t3_free_alphabet();
    T3CenterSplit out;
    LieElement comp2 = g.component(2); // c12 * t12
    LieElement comp3 = g.component(3); // over {t13, t23}
    Scalar c12 = comp2.coord(Word{0});
    Scalar c13 = comp3.coord(Word{0});
    Scalar c23 = comp3.coord(Word{1});
    out.central = c13;
    out.free_part = LieElement(a2);
    out.free_part.add_coord(Word{0}, c12 - c13);
    out.free_part.add_coord(Word{1}, c23 - c13);
    // Degrees >= 2 live in component 3; substitute t13 = -t12 - t23.
    LieElement higher(component_alphabet(3));
    for (const auto& [w, c] : comp3.coords())
        if (w.size() >= 2) higher.add_coord(w, c);
    std::vector<LieElement> images = {
        -(LieElement::generator(a2, 0) + LieElement::generator(a2, 1)),
        LieElement::generator(a2, 1)};
    out.free_part += freelie::substitute(higher, images);
    return out;
}

CombedLie phi_in_t3(const LieElement& phi_xy, bool use_t13) {
    std::vector<CombedLie> images;
    if (use_t13)
        images = {CombedLie::generator(3, 1, 3), CombedLie::generator(3, 2, 3)};
    else
        images = {CombedLie::generator(3, 1, 2), CombedLie::generator(3, 2, 3)};
    return freelie::substitute_hom(phi_xy, images,
                                   [](const CombedLie& a, const CombedLie& b) { return bracket(a, b); });
}

namespace {
std::string pair_name(int a, int b) {
    if (a > b) std::swap(a, b);
    return "t" + std::to_string(a) + std::to_string(b);
}
} // namespace

ncalg::AlphabetPtr fiber_alphabet(int n, int i) {
    std::vector<std::string> names;
    for (int k = 1; k <= n; ++k)
        if (k != i) names.push_back(pair_name(k, i));
    std::sort(names.begin(), names.end());
    return ncalg::alphabet(names);
}

LieElement fiber_coords(const CombedLie& e, int i) {
    const int n = e.n();
    CombedLie moved = e;
    if (i != n) {
        std::vector<int> perm(n);
        for (int k = 1; k <= n; ++k) perm[k - 1] = k;
        std::swap(perm[i - 1], perm[n - 1]);
        moved = relabel_strands(e, perm);
    }
    for (int s = 2; s < n; ++s)
        if (!moved.component(s).is_zero())
            throw std::invalid_argument("fiber_coords: element not in ker pr^" + std::to_string(i));
    LieElement top = moved.component(n);
    // Post-swap letter k-1 is t_{kn}; it pulls back to the original pair
    // {tau(k), tau(n)} with tau = (i n).
    auto target = fiber_alphabet(n, i);
    std::vector<LieElement> images;
    for (int k = 1; k < n; ++k) {
        int a = (k == i) ? n : k; // tau(k)
        int b = i;                // tau(n)
        images.push_back(LieElement::generator(target, target->letter_index(pair_name(a, b))));
    }
    return freelie::substitute(top, images);
}

CombedLie from_fiber(const LieElement& e, int n) {
    std::vector<CombedLie> images;
    for (const std::string& name : e.alph()->names()) {
        int a = name[1] - '0';
        int b = name[2] - '0';
        images.push_back(CombedLie::generator(n, a, b));
    }
    return freelie::substitute_hom(e, images,
                                   [](const CombedLie& a, const CombedLie& b) { return bracket(a, b); });
}

} // namespace dkpent::dkho
