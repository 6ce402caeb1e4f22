#pragma once

#include "dkpent/homs.hpp"

#include <memory>
#include <optional>
#include <string>

namespace dkpent::dkho {

// Subspace requests against t_n, memoized per (n, key, degree).
//
//   full            : the whole degree component
//   brun            : intersection of ker pr^i over i = 1..n
//   brun_m          : intersection over the moving strands i = m+1..m+n' (mixed)
//   dk_m            : kernel of the composite deletion of all moving strands
//   ker i1,i2,...   : intersection of the named deletion kernels
//   ideal g1,g2,... : ideal generated by the listed generators t_{ab}
//   lcs k of inner  : k-th lower central series term, Gamma_1 = inner
struct SubSpec {
    enum class Kind { Full, Brun, BrunMixed, Dk, KernelList, Ideal, Lcs } kind = Kind::Full;
    int m = 0;                                   // fixed strands for BrunMixed / Dk
    std::vector<int> kernels;                    // KernelList
    std::vector<std::pair<int, int>> ideal_gens; // Ideal
    int k = 1;                                   // Lcs
    std::shared_ptr<SubSpec> inner;              // Lcs

    static SubSpec full() { return {}; }
    static SubSpec brun() { return {Kind::Brun, 0, {}, {}, 1, nullptr}; }
    static SubSpec brun_mixed(int m) { return {Kind::BrunMixed, m, {}, {}, 1, nullptr}; }
    static SubSpec dk(int m) { return {Kind::Dk, m, {}, {}, 1, nullptr}; }
    static SubSpec kernel_list(std::vector<int> is) { return {Kind::KernelList, 0, std::move(is), {}, 1, nullptr}; }
    static SubSpec ideal(std::vector<std::pair<int, int>> gens) {
        return {Kind::Ideal, 0, {}, std::move(gens), 1, nullptr};
    }
    static SubSpec lcs(int k, SubSpec inner_spec) {
        SubSpec s;
        s.kind = Kind::Lcs;
        s.k = k;
        s.inner = std::make_shared<SubSpec>(std::move(inner_spec));
        return s;
    }

    std::string key() const;
};

// Degree component of the requested subspace, in t_n coordinates.
linalg::Subspace tn_subspace(int n, const SubSpec& spec, int degree);

// pr^i_n as a matrix t_n(d) -> t_{n-1}(d).
linalg::Matrix pr_matrix(int n, int i, int degree);

// Canonical residual of e against the subspace; zero iff e lies in it.
linalg::Vec mod_reduce(const CombedLie& e, const linalg::Subspace& sub, int degree);

// Verifies [sub, sub] (+) sub degreewise up to max_degree.
bool is_subalgebra(int n, const SubSpec& spec, int max_degree);

// --- free-Lie ambient subspaces --------------------------------------------

// Ideal generated by the given letters inside the free Lie algebra.
linalg::Subspace free_ideal(const ncalg::AlphabetPtr& a, const std::vector<ncalg::Letter>& gens, int degree);

// Span of [A_p, B_q] over p + q = degree.
linalg::Subspace free_bracket_span(const ncalg::AlphabetPtr& a,
                                   const std::function<linalg::Subspace(int)>& left,
                                   const std::function<linalg::Subspace(int)>& right, int degree);

// W_I = span{ad(t23)^{k-1} ad(t24)^{l-1} [t23, t24]} in L(t12, t23, t24).
linalg::Subspace wi_subspace(int degree);
ncalg::AlphabetPtr wi_alphabet(); // {t12, t23, t24}

// W_J = span{ad(t24)^m t34} in L(t14, t24, t34).
linalg::Subspace wj_subspace(int degree);
ncalg::AlphabetPtr wj_alphabet(); // {t14, t24, t34}

} // namespace dkpent::dkho
