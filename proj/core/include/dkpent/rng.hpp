#pragma once

#include "dkpent/braid.hpp"
#include "dkpent/combed.hpp"
#include "dkpent/lie.hpp"

#include <random>

namespace dkpent::rng {

// Deterministic generator for randomized audits; every report embeds its
// seed.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t seed_used() const { return seed_; }
    int uniform(int lo, int hi); // inclusive
    Scalar small_scalar();       // nonzero, numerator in [-3,3], denominator in [1,3]

    freelie::LieElement lie(const ncalg::AlphabetPtr& a, int degree);
    freelie::LieElement lie_nonzero(const ncalg::AlphabetPtr& a, int degree);
    ncalg::NCPoly ncpoly(const ncalg::AlphabetPtr& a, int degree, int terms);
    ncalg::Word word(std::size_t num_letters, int length);
    dkho::CombedLie combed(int n, int degree);

    braids::BraidWord braid(int n, int length);
    braids::BraidWord pure_braid(int n, int generators);
    // Pure braid with all linking numbers zero (a product of commutators).
    braids::BraidWord commutator_braid(int n, int factors);

  private:
    std::uint64_t seed_ = 0;
    std::mt19937_64 eng_;
};

} // namespace dkpent::rng
