#pragma once

#include "dkpent/subspace.hpp"
#include "dkpent/ymaps.hpp"

namespace dkpent::dmr {

// Element of the P-space: linear combination of basis symbols p_{a,b} indexed
// by pairs of (possibly empty) compositions.  p_{a,b} realizes the monomial
// z^{a_k-1} x ... z^{a_1-1} x z^{b_l-1} y ... z^{b_1-1} y; (x-deg, y-deg)
// = (dp a, dp b).
class PPoly {
  public:
    const std::map<std::pair<Composition, Composition>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Composition& a, const Composition& b, const Scalar& c);
    Scalar coeff(const Composition& a, const Composition& b) const;

    PPoly& operator+=(const PPoly& o);
    PPoly& operator-=(const PPoly& o);
    PPoly& operator*=(const Scalar& c);
    friend PPoly operator+(PPoly a, const PPoly& b) { a += b; return a; }
    friend PPoly operator-(PPoly a, const PPoly& b) { a -= b; return a; }
    bool operator==(const PPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    std::map<std::pair<Composition, Composition>, Scalar> terms_;
};

// The projection pi : k<t12,t23,t24> -> P, t12 -> z, t23 -> x, t24 -> y;
// monomials that are not of p_{a,b} shape go to zero.
PPoly pi_p(const ncalg::NCPoly& p_over_i_alphabet);

// Realized monomial of p_{a,b} in k<x,y,z> (alphabet {z,x,y}).
ncalg::NCPoly p_monomial(const Composition& a, const Composition& b);
ncalg::AlphabetPtr zxy_alphabet();

// p : P -> k<Y> (x) k<Y>, p_{a,b} -> word(a) (x) word(b).
ncalg::TensorPoly p_to_tensor(const PPoly& p);

// lambda(p_{a,b}) = sum over Delta_*(a) = a' (x) a'' of p_{a'b, a''}.
// `reduced` drops the a (x) 1 term of Delta_*(a) (the surjection-sum reading
// of the definition); identity on the pure sectors P_{>=1,0}, P_{0,>=1} and
// on 1.
PPoly lambda_map(const PPoly& p, bool reduced = true);

// (-)^ab_I : psi -> psi(t23, -t23 - t24), landing in W_I modulo [I, I].
freelie::LieElement ab_i(const freelie::LieElement& psi_xy);

// diag^{123,124} : psi -> psi(t12, t23) + psi(t12, t24).
freelie::LieElement diag_123_124(const freelie::LieElement& psi_xy);

// pent(psi(t12, t23)) rewritten in the free generators (t12, t23, t24) of
// ker pr^2_4.
freelie::LieElement pent1_dmr_fiber(const freelie::LieElement& psi_xy);

struct DiagramReport {
    bool pass = false;
    ncalg::TensorPoly left, right; // both composite paths in k<Y> (x) k<Y>
};

// Both paths of the stuffle-coproduct diagram: p o (lambda o pi) o
// (diag^{123,124} + pent^1_dmr - ab_I) versus Delta_* o pi_Y.  The corr
// variant adds corr~ on the left and applies Delta_* to psi_* on the right.
DiagramReport dmr_diagram_check(const freelie::LieElement& psi, bool with_corr = false,
                                bool reduced_lambda = true);

} // namespace dkpent::dmr
