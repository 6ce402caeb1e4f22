#pragma once

#include "dkpent/linalg.hpp"
#include "dkpent/lyndon.hpp"
#include "dkpent/ncpoly.hpp"

#include <map>
#include <vector>

namespace dkpent::freelie {

// Free Lie algebra element in Lyndon coordinates: every key is a Lyndon word,
// mixed degrees allowed.
class LieElement {
  public:
    LieElement() = default;
    explicit LieElement(ncalg::AlphabetPtr a) : alph_(std::move(a)) {}

    static LieElement generator(ncalg::AlphabetPtr a, Letter l) {
        LieElement e(std::move(a));
        e.coords_[Word{l}] = 1;
        return e;
    }

    const ncalg::AlphabetPtr& alph() const { return alph_; }
    const std::map<Word, Scalar>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    void add_coord(const Word& lyndon, const Scalar& c);
    Scalar coord(const Word& lyndon) const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Scalar& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { a += b; return a; }
    friend LieElement operator-(LieElement a, const LieElement& b) { a -= b; return a; }
    friend LieElement operator*(LieElement a, const Scalar& c) { a *= c; return a; }
    friend LieElement operator*(const Scalar& c, LieElement a) { a *= c; return a; }
    LieElement operator-() const;
    bool operator==(const LieElement& o) const { return coords_ == o.coords_; }

    int min_degree() const;
    int max_degree() const;
    LieElement homogeneous_part(int degree) const;

    std::string str() const;

  private:
    ncalg::AlphabetPtr alph_;
    std::map<Word, Scalar> coords_;
};

ncalg::NCPoly to_ncpoly(const LieElement& e);

struct LieNormalForm {
    bool ok = false;
    LieElement element;   // valid when ok
    ncalg::NCPoly defect; // theta(p) - m p per degree, when not ok
};

LieNormalForm lie_normal_form(const ncalg::NCPoly& p);

// Throws when p is not a Lie element.
LieElement as_lie(const ncalg::NCPoly& p);

LieElement bracket(const LieElement& a, const LieElement& b);

// Ordered Lyndon basis of the degree component, and coordinates against it.
std::vector<Word> lyndon_basis(const ncalg::AlphabetPtr& a, int degree);
linalg::Vec lie_to_vec(const LieElement& e, int degree);
LieElement lie_from_vec(const ncalg::AlphabetPtr& a, int degree, const linalg::Vec& v);

// Evaluates the Lie homomorphism sending letter l to images[l]; Bracket is
// the target's bracket.  V needs +=, scalar *, and copy.
template <class V, class BracketFn>
V substitute_hom(const LieElement& e, const std::vector<V>& images, BracketFn br) {
    if (!e.alph()) throw std::invalid_argument("substitute_hom: element has no alphabet");
    if (images.size() != e.alph()->size()) throw std::invalid_argument("arity mismatch");
    auto eval = [&](auto&& self, const Word& w) -> V {
        if (w.size() == 1) return images[w[0]];
        auto [u, v] = standard_factorization(w);
        return br(self(self, u), self(self, v));
    };
    V acc = images.empty() ? V() : images[0] * Scalar(0);
    for (const auto& [w, c] : e.coords()) {
        V t = eval(eval, w);
        t *= c;
        acc += t;
    }
    return acc;
}

LieElement substitute(const LieElement& e, const std::vector<LieElement>& images);

// Substitution into the associative algebra with bracket = commutator.
ncalg::NCPoly substitute_nc(const LieElement& e, const std::vector<ncalg::NCPoly>& images);

// Lazard elimination of the last letter c: L(A + c) = L(A) x| ideal(c), the
// ideal being free on the ad-words ad_{w_1}...ad_{w_k}(c), w_i in A.
struct LazardSplit {
    LieElement outer;                    // the L(A) component (alphabet A)
    std::map<Word, Scalar> ideal_coords; // coordinates on ad_w(c) modulo [ideal, ideal]
};

LazardSplit lazard_split(const LieElement& e);

// ad_{w_1} ... ad_{w_k}(last letter) as a LieElement of the full alphabet.
LieElement ad_word(const ncalg::AlphabetPtr& full, const Word& w_over_outer);

// Degree-d component of the ideal generated by the last letter, and of its
// derived subalgebra, as subspaces in Lyndon coordinates.
linalg::Subspace lazard_ideal(const ncalg::AlphabetPtr& full, int degree);
linalg::Subspace lazard_ideal_derived(const ncalg::AlphabetPtr& full, int degree);

} // namespace dkpent::freelie
