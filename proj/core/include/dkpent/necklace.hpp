#pragma once

#include "dkpent/tder.hpp"

namespace dkpent::krv {

using ncalg::WedgePoly;

// Hamiltonian correspondence |a| -> (dR_{x0} N(|a|), dR_{x1} N(|a|)); lands in
// special derivations.  Inverse: (a0, a1) -> |x0 a0 + x1 a1|.
TDer hamiltonian(const CyclicPoly& a);
CyclicPoly hamiltonian_inverse(const TDer& u);

// Necklace bracket pulled back along H: {a, b} = H^{-1}([H(a), H(b)]).
CyclicPoly necklace_bracket(const CyclicPoly& a, const CyclicPoly& b);

// Necklace cobracket via the commuting square: delta(|a|) =
// wedge(delta_tilde(w)) for any representative w with |w| = div(H(|a|)).
WedgePoly necklace_cobracket(const CyclicPoly& a);

// Induced map |k<X>| -> |k<X>| ^ |k<X>| of delta_tilde (used on div images).
WedgePoly delta_tilde_cyclic(const CyclicPoly& a);

// div(H(|a|)) = 1/(m-1) |mu(N(|a|))| for |a| homogeneous of degree m >= 2.
bool div_mu_identity_check(const ncalg::Word& cyclic_rep);

// Span of |x0^d|, |x1^d| (and optionally |(x0+x1)^d|) inside the degree-d
// cyclic-word space.
linalg::Subspace cyclic_span(int degree, bool with_xinf);
std::vector<ncalg::Word> cyclic_word_basis(int degree);
linalg::Vec cyclic_to_vec(const CyclicPoly& c, int degree);

enum class KrvKind { Krv2, KrvSym };

struct KrvReport {
    bool pass = false;
    bool special_ok = false, div_ok = false, theta_ok = false;
    CyclicPoly div_value;
    linalg::Vec span_certificate; // solved coefficients on the span basis
};

// krv_2: speciality + div(u) in the cyclic span; krv^sym additionally asks
// Theta-invariance.  u must have homogeneous components.
KrvReport krv_membership(const TDer& u, KrvKind kind, bool with_xinf);
KrvReport krv_membership(const LieElement& psi, KrvKind kind, bool with_xinf);

} // namespace dkpent::krv
