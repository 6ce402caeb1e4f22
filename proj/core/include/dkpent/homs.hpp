#pragma once

#include "dkpent/combed.hpp"

#include <functional>

namespace dkpent::dkho {

// Lie homomorphism determined by generator images: t_{ij} -> images(i, j).
CombedLie map_generators(const CombedLie& e, int target_n,
                         const std::function<CombedLie(int, int)>& images);

// Strand deletion pr^i_n : t_n -> t_{n-1}; t_{il} -> 0, t_{kl} -> t_{kl}
// with indices above i shifted down.
CombedLie pr(const CombedLie& e, int i);

// Partially defined map f : {1..m} -> {1..n} given by its fibers
// f^{-1}(1),...,f^{-1}(n) (disjoint subsets of {1..m}); induces
// t_n -> t_m, (t_ij)^f = sum over f^{-1}(i) x f^{-1}(j).
struct PartialMap {
    int m = 0;
    std::vector<std::vector<int>> fibers;
};

CombedLie apply_partial(const CombedLie& e, const PartialMap& f);

// Strand relabeling by a permutation of {1..n} (one-line notation).
CombedLie relabel_strands(const CombedLie& e, const std::vector<int>& perm);

// Element of p_n = t_{n-1}/Z(t_{n-1}); the degree-1 center direction is
// normalized away by zeroing the t_{12} coefficient.
class PSphereElement {
  public:
    PSphereElement() = default;
    explicit PSphereElement(CombedLie rep);

    int n() const { return rep_.n() + 1; }
    const CombedLie& rep() const { return rep_; }

    PSphereElement& operator+=(const PSphereElement& o);
    PSphereElement& operator-=(const PSphereElement& o);
    PSphereElement& operator*=(const Scalar& c);
    friend PSphereElement operator+(PSphereElement a, const PSphereElement& b) { a += b; return a; }
    friend PSphereElement operator-(PSphereElement a, const PSphereElement& b) { a -= b; return a; }
    friend PSphereElement operator*(PSphereElement a, const Scalar& c) { a *= c; return a; }
    bool operator==(const PSphereElement& o) const { return rep_ == o.rep_; }
    bool is_zero() const { return rep_.is_zero(); }

  private:
    CombedLie rep_;
};

// K_n : t_n -> p_{n+1}, t_{ij} -> X_{ij}.
PSphereElement K(const CombedLie& e);

// spr^i_n : p_n -> p_{n-1}; X_{il} -> 0, X_{kl} -> X_{kl}.
PSphereElement spr(const PSphereElement& e, int i);

// p_n coordinates: t_{n-1} coordinates with the t_{12} column removed in
// degree 1.
std::size_t pn_dim(int n, int degree);
linalg::Vec pn_to_vec(const PSphereElement& e, int degree);

struct T3CenterSplit {
    Scalar central;            // coefficient of t_{12}+t_{13}+t_{23}
    LieElement free_part;      // element of L(t12, t23)
};

// t_3 = k (t12+t13+t23) (+) L(t12, t23); higher degrees substitute
// t13 = -t12 - t23.
T3CenterSplit t3_center_split(const CombedLie& g);

ncalg::AlphabetPtr t3_free_alphabet(); // {t12, t23}

// Embeds phi(x, y) as phi(t12, t23) (or phi(t13, t23)) in t_3.
CombedLie phi_in_t3(const LieElement& phi_xy, bool use_t13 = false);

// For e in ker pr^i_n, its coordinates in the free Lie algebra on the fiber
// generators {t_{ki} : k != i} u {t_{in}}; alphabet names are the original
// generator names sorted lexicographically.  Throws when e is not in the
// kernel.
LieElement fiber_coords(const CombedLie& e, int i);
ncalg::AlphabetPtr fiber_alphabet(int n, int i);

// Inverse embedding of fiber coordinates back into t_n.
CombedLie from_fiber(const LieElement& e, int n);

} // namespace dkpent::dkho
