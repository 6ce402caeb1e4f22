#pragma once

#include "dkpent/subspace.hpp"

namespace dkpent::pentagon {

using dkho::CombedLie;
using dkho::PSphereElement;
using freelie::LieElement;

// pent(g) = g^{1,2,3} + g^{1,23,4} + g^{2,3,4} - g^{12,3,4} - g^{1,2,34}.
CombedLie pent_eval(const CombedLie& g3);
PSphereElement pent_eval(const PSphereElement& g4);

// pent(phi(t12, t23)) for phi in L(x, y), linear in phi; memoized per degree
// on the Lyndon basis.
CombedLie pent_of_phi(const LieElement& phi);
linalg::Vec pent_vec_of_phi(const LieElement& phi, int degree);

enum class Flavor { GRT, DMR, KRV };
std::string flavor_name(Flavor f);

// Brunnian subalgebra of the flavor (brun_4, brun_{1,3}, brun_{2,2}) in t_4.
dkho::SubSpec flavor_brun(Flavor f);

// The paper indexes its filtration so that pent^1 lands in brun/[brun,brun];
// level k therefore reduces modulo the standard Gamma_{k+1}.
linalg::Subspace flavor_gamma(Flavor f, int k, int degree);

// Complement coordinates of pent(phi(t12,t23)) modulo Gamma_k of the
// flavor's Brunnian subalgebra; empty residual means pent^k_flavor(phi) = 0.
// phi must be homogeneous of degree >= 2.
linalg::Vec pent_k_eval(const LieElement& phi, Flavor f, int k);

struct Grt1Report {
    bool antisym = false, hexagon = false, pentagon = false;
    LieElement antisym_defect, hexagon_defect;
    CombedLie pentagon_defect;
    bool all() const { return antisym && hexagon && pentagon; }
};

// phi(x0,x1) = -phi(x1,x0); phi(x0,x1)+phi(x1,xoo)+phi(xoo,x0) = 0 with
// xoo = -x0-x1; pent(phi(t12,t23)) = 0.
Grt1Report grt1_membership(const LieElement& phi);

enum class System { Grt1, PentK, Dmr0, KrvSymPair, GrtEm };
std::string system_name(System s);

struct SolveOptions {
    Flavor flavor = Flavor::DMR;
    int k = 1;
    bool krv_span_with_xinf = true; // CyclicSpan convention for KrvSymPair
};

// Kernel of the system's defect map on L_weight(x, y), in Lyndon coordinates.
linalg::Subspace solve_space(System system, int weight, const SolveOptions& opts = {});
std::vector<LieElement> solve_basis(System system, int weight, const SolveOptions& opts = {});

struct AuditRow {
    int weight = 0;
    int k = 0;
    std::size_t dim_grt = 0, dim_dmr = 0, dim_krv = 0;
    bool grt_in_dmr = false, dmr_in_krv = false;
    bool grt_k_monotone = false, dmr_k_monotone = false, krv_k_monotone = false;
    bool ok() const {
        return grt_in_dmr && dmr_in_krv && grt_k_monotone && dmr_k_monotone && krv_k_monotone;
    }
};

// Solution-space containments of Theorem-style relations: Sol(pent^k) in
// Sol(pent^k_dmr) in Sol(pent^k_krv), and Sol(pent^k) in Sol(pent^{k-1}).
std::vector<AuditRow> implication_audit(int max_weight, int max_k);

} // namespace dkpent::pentagon
