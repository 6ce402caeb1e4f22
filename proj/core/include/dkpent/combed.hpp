#pragma once

#include "dkpent/lie.hpp"

#include <map>

namespace dkpent::dkho {

using freelie::LieElement;
using ncalg::Letter;
using ncalg::Word;

// Alphabet {t_{1s}, ..., t_{s-1,s}} of the combed component s; letter k-1
// stands for t_{ks}.
ncalg::AlphabetPtr component_alphabet(int s);

// Element of t_n in iterated-semidirect normal form: one free Lie component
// per strand s = 2..n, where component s lives over {t_{1s},...,t_{s-1,s}}.
class CombedLie {
  public:
    CombedLie() = default;
    explicit CombedLie(int n) : n_(n) {}

    // t_{ij} with 1 <= i < j <= n (arguments may come in either order).
    static CombedLie generator(int n, int i, int j);

    int n() const { return n_; }
    const std::map<int, LieElement>& components() const { return comp_; }
    LieElement component(int s) const;
    void add_component(int s, const LieElement& e);
    bool is_zero() const { return comp_.empty(); }

    CombedLie& operator+=(const CombedLie& o);
    CombedLie& operator-=(const CombedLie& o);
    CombedLie& operator*=(const Scalar& c);
    friend CombedLie operator+(CombedLie a, const CombedLie& b) { a += b; return a; }
    friend CombedLie operator-(CombedLie a, const CombedLie& b) { a -= b; return a; }
    friend CombedLie operator*(CombedLie a, const Scalar& c) { a *= c; return a; }
    friend CombedLie operator*(const Scalar& c, CombedLie a) { a *= c; return a; }
    CombedLie operator-() const;
    bool operator==(const CombedLie& o) const { return n_ == o.n_ && comp_ == o.comp_; }

    int min_degree() const;
    int max_degree() const;
    CombedLie homogeneous_part(int degree) const;

    std::string str() const;

  private:
    int n_ = 0;
    std::map<int, LieElement> comp_;
};

CombedLie bracket(const CombedLie& a, const CombedLie& b);

// Tangential action of t_{ij} (i, j < s) on the component-s fiber:
// t_{is} -> [t_{is}, t_{js}], t_{js} -> [t_{js}, t_{is}], others -> 0.
LieElement generator_action(int i, int j, const LieElement& target, int s);

// Ordered coordinate basis of t_n at one degree: (s, Lyndon word) pairs,
// s ascending then lexicographic.
const std::vector<std::pair<int, Word>>& tn_basis(int n, int degree);
std::size_t tn_dim(int n, int degree);
linalg::Vec tn_to_vec(const CombedLie& e, int degree);
CombedLie tn_from_vec(int n, int degree, const linalg::Vec& v);

// Sum of all t_{ij}: spans the one-dimensional center in degree 1.
CombedLie tn_center(int n);

} // namespace dkpent::dkho
