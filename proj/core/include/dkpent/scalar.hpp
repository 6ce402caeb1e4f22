#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace dkpent {

// Exact rational scalar. mpq_rational keeps gcd(num, den) = 1 and den > 0.
using Scalar = boost::multiprecision::mpq_rational;

inline std::string scalar_to_string(const Scalar& s) {
    return numerator(s).str() + "/" + denominator(s).str();
}

// Accepts "n" or "n/d".
inline Scalar scalar_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    return Scalar(text);
}

} // namespace dkpent
