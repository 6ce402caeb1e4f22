#pragma once

#include "dkpent/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dkpent::ncalg {

using Letter = std::uint32_t;

// A word is a sequence of letter indices into its alphabet.  Empty = unit.
using Word = std::vector<Letter>;

// Alphabets are interned: equal letter lists share one instance, so alphabet
// agreement is pointer equality.  The "y" family is the infinite alphabet
// y_1, y_2, ... where letter l stands for y_{l+1} and has weight l+1.
class Alphabet {
  public:
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}
    explicit Alphabet(bool y_family) : y_family_(y_family) {}

    bool is_y_family() const { return y_family_; }
    std::size_t size() const { return names_.size(); }
    std::string letter_name(Letter l) const;
    int letter_weight(Letter l) const { return y_family_ ? static_cast<int>(l) + 1 : 1; }
    Letter letter_index(const std::string& name) const;
    const std::vector<std::string>& names() const { return names_; }

  private:
    std::vector<std::string> names_;
    bool y_family_ = false;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr alphabet(const std::vector<std::string>& names);
AlphabetPtr y_alphabet();
AlphabetPtr x_alphabet();  // {x0, x1}
AlphabetPtr xy_alphabet(); // {x, y}

int word_weight(const Alphabet& a, const Word& w);
std::string word_to_string(const Alphabet& a, const Word& w);

// Sparse noncommutative polynomial: sorted word -> nonzero coefficient map.
class NCPoly {
  public:
    NCPoly() = default;
    explicit NCPoly(AlphabetPtr a) : alph_(std::move(a)) {}
    NCPoly(AlphabetPtr a, const Word& w, const Scalar& c) : alph_(std::move(a)) {
        if (c != 0) terms_[w] = c;
    }

    static NCPoly unit(AlphabetPtr a) { return NCPoly(std::move(a), Word{}, 1); }
    static NCPoly letter(AlphabetPtr a, Letter l) { return NCPoly(std::move(a), Word{l}, 1); }

    const AlphabetPtr& alph() const { return alph_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(const Word& w, const Scalar& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Scalar& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { a += b; return a; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { a -= b; return a; }
    friend NCPoly operator*(NCPoly a, const Scalar& c) { a *= c; return a; }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { a *= c; return a; }
    NCPoly operator-() const;
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b); // concatenation product
    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

    int min_degree() const; // -1 when zero
    int max_degree() const;
    NCPoly homogeneous_part(int degree) const;
    bool is_homogeneous() const;

    std::string str() const;

  private:
    void require_same_alphabet(const NCPoly& o) const;

    AlphabetPtr alph_;
    std::map<Word, Scalar> terms_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);

// Substitutes images[l] for each letter l of a finite alphabet, word by word.
NCPoly subst_assoc(const NCPoly& p, const std::vector<NCPoly>& images);

// Tensor square k<A> (x) k<A>, componentwise concatenation product.
class TensorPoly {
  public:
    TensorPoly() = default;
    explicit TensorPoly(AlphabetPtr a) : alph_(std::move(a)) {}

    const AlphabetPtr& alph() const { return alph_; }
    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& u, const Word& v, const Scalar& c);
    Scalar coeff(const Word& u, const Word& v) const;

    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly& operator*=(const Scalar& c);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { a += b; return a; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { a -= b; return a; }
    friend TensorPoly operator*(TensorPoly a, const Scalar& c) { a *= c; return a; }
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
    bool operator==(const TensorPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    AlphabetPtr alph_;
    std::map<std::pair<Word, Word>, Scalar> terms_;
};

TensorPoly tensor(const NCPoly& a, const NCPoly& b);

// Cyclic words: keys are the lexicographically minimal rotation.
Word min_rotation(const Word& w);

class CyclicPoly {
  public:
    CyclicPoly() = default;
    explicit CyclicPoly(AlphabetPtr a) : alph_(std::move(a)) {}

    const AlphabetPtr& alph() const { return alph_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_class(const Word& representative, const Scalar& c);

    CyclicPoly& operator+=(const CyclicPoly& o);
    CyclicPoly& operator-=(const CyclicPoly& o);
    CyclicPoly& operator*=(const Scalar& c);
    friend CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) { a += b; return a; }
    friend CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b) { a -= b; return a; }
    friend CyclicPoly operator*(CyclicPoly a, const Scalar& c) { a *= c; return a; }
    bool operator==(const CyclicPoly& o) const { return terms_ == o.terms_; }

    // Drops the degree-0 component (the k.1 line of |k<X>|).
    CyclicPoly reduced() const;

    std::string str() const;

  private:
    AlphabetPtr alph_;
    std::map<Word, Scalar> terms_;
};

// Antisymmetric pairs of cyclic words; stored with first key < second key.
class WedgePoly {
  public:
    WedgePoly() = default;
    explicit WedgePoly(AlphabetPtr a) : alph_(std::move(a)) {}

    const AlphabetPtr& alph() const { return alph_; }
    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_wedge(const Word& a, const Word& b, const Scalar& c);

    WedgePoly& operator+=(const WedgePoly& o);
    WedgePoly& operator-=(const WedgePoly& o);
    WedgePoly& operator*=(const Scalar& c);
    friend WedgePoly operator+(WedgePoly a, const WedgePoly& b) { a += b; return a; }
    friend WedgePoly operator-(WedgePoly a, const WedgePoly& b) { a -= b; return a; }
    bool operator==(const WedgePoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    AlphabetPtr alph_;
    std::map<std::pair<Word, Word>, Scalar> terms_;
};

// --- Hopf-algebra and cyclic-word operations -------------------------------

// Coproduct with all letters primitive: Delta(w) = sum over order-preserving
// splits of the positions of w.
TensorPoly coproduct(const NCPoly& p);

// S(w) = (-1)^{|w|} reverse(w).
NCPoly antipode(const NCPoly& p);

// (1 (x) S) o Delta.
TensorPoly delta_tilde(const NCPoly& p);

Scalar counit(const NCPoly& p);

struct RightLeftDecomposition {
    Scalar eps;
    NCPoly d_r0, d_r1, d_l0, d_l1;
};

// x = eps(x) + x0 dR0(x) + x1 dR1(x) = eps(x) + dL0(x) x0 + dL1(x) x1.
// Requires a two-letter alphabet.
RightLeftDecomposition decompose_right_left(const NCPoly& p);

// Single-letter right/left decompositions (any alphabet).
NCPoly d_right(const NCPoly& p, Letter l);
NCPoly d_left(const NCPoly& p, Letter l);

// Reduced coaction: sum over adjacent equal-letter merges; kills words of
// length <= 1.
NCPoly reduced_coaction(const NCPoly& p);

CyclicPoly cyclic_project(const NCPoly& p);

// N(|s_1...s_m|) = sum of the m rotations (duplicates counted).
NCPoly symmetrize(const AlphabetPtr& a, const Word& cyclic_rep);
NCPoly symmetrize(const CyclicPoly& c);

// Factorwise cyclic projection followed by antisymmetrization; degree-0
// cyclic factors are dropped.
WedgePoly wedge_project(const TensorPoly& t);

} // namespace dkpent::ncalg
