#pragma once

#include "dkpent/braid.hpp"
#include "dkpent/lie.hpp"
#include "dkpent/tder.hpp"

#include <string>

namespace dkpent::io {

// {"alphabet": [...], "terms": [{"coeff": "n/d", "word": [...]}]}
std::string to_json(const ncalg::NCPoly& p);
ncalg::NCPoly ncpoly_from_json(const std::string& text);

// Same layout with "cyclic": true.
std::string to_json(const ncalg::CyclicPoly& p);

// {"alphabet": [...], "coords": [{"lyndon": [...], "coeff": "n/d"}]}
std::string to_json(const freelie::LieElement& e);
freelie::LieElement lie_from_json(const std::string& text);

// {"n": 4, "word": [[1,1],[2,-1]], "fixed": m}
std::string to_json(const braids::BraidWord& b);
braids::BraidWord braid_from_json(const std::string& text);

// Ordered pair of NCPoly values.
std::string to_json(const krv::TangentialDerivation& u);
krv::TangentialDerivation tder_from_json(const std::string& text);

// {"ambient": ..., "spec": ..., "degree": d, "version": v, "rows": [["n/d",...]]}
inline constexpr int kSubspaceFormatVersion = 1;
std::string subspace_to_json(const std::string& ambient, const std::string& spec, int degree,
                             const linalg::Subspace& s);
bool subspace_from_json(const std::string& text, const std::string& ambient, const std::string& spec,
                        int degree, linalg::Subspace& out);

} // namespace dkpent::io
