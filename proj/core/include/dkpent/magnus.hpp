#pragma once

#include "dkpent/freegroup.hpp"
#include "dkpent/lie.hpp"

namespace dkpent::braids {

// Magnus expansion x_i -> 1 + X_i, truncated at total degree <= truncation.
struct MagnusSeries {
    int rank = 0;
    int truncation = 0;
    ncalg::NCPoly poly; // over the rank-letter alphabet X1..Xr

    bool operator==(const MagnusSeries& o) const { return poly == o.poly; }
};

ncalg::AlphabetPtr magnus_alphabet(int rank);

MagnusSeries magnus(const FreeGroupWord& w, int rank, int truncation);
MagnusSeries magnus_one(int rank, int truncation);
MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries magnus_conjugate(const MagnusSeries& a, const MagnusSeries& by);

// Deletion-induced map on series: X_i -> 0, X_j -> X_{j-1} for j > i.
MagnusSeries magnus_delete(const MagnusSeries& s, int i);

// Smallest degree of s - 1, or -1 when s = 1 up to the truncation.
int leading_degree(const MagnusSeries& s);
ncalg::NCPoly leading_term(const MagnusSeries& s);

struct TrivialityReport {
    bool defined = false;       // comb precondition held
    int leading = -1;           // -1: no nonzero term up to the truncation
    bool saturated = false;     // leading degree exceeds the truncation
    ncalg::NCPoly leading_poly; // over the Magnus alphabet
    bool in_deletion_kernels = false;
    bool lie_leading = false;
    bool leading_in_brun = false; // Lie projection against brun_4 at that degree
};

// Magnus criterion data for Pent(Phi): leading term of M(comb(Pent(Phi)))-1
// and its membership in the deletion-kernel intersection; `moving` defaults
// to all strands but the fiber one.
TrivialityReport n_triviality_report(const BraidWord& pent, int truncation,
                                     std::vector<int> moving = {});

} // namespace dkpent::braids
