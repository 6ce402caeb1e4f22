#include "dkpent/pentagon.hpp"

#include "dkpent/ymaps.hpp"

#include <mutex>
#include <stdexcept>

namespace dkpent::pentagon {

namespace {

const std::vector<dkho::PartialMap>& pent_maps() {
    static const std::vector<dkho::PartialMap> maps = [] {
        std::vector<dkho::PartialMap> m;
        m.push_back({4, {{1}, {2}, {3}}});    // g^{1,2,3}
        m.push_back({4, {{1}, {2, 3}, {4}}}); // g^{1,23,4}
        m.push_back({4, {{2}, {3}, {4}}});    // g^{2,3,4}
        m.push_back({4, {{1, 2}, {3}, {4}}}); // g^{12,3,4}
        m.push_back({4, {{1}, {2}, {3, 4}}}); // g^{1,2,34}
        return m;
    }();
    return maps;
}

} // namespace

CombedLie pent_eval(const CombedLie& g3) {
    if (g3.n() != 3 && !g3.is_zero()) throw std::invalid_argument("pent_eval needs a t_3 element");
    const auto& maps = pent_maps();
    CombedLie r(4);
    if (g3.is_zero()) return r;
    r += dkho::apply_partial(g3, maps[0]);
    r += dkho::apply_partial(g3, maps[1]);
    r += dkho::apply_partial(g3, maps[2]);
    r -= dkho::apply_partial(g3, maps[3]);
    r -= dkho::apply_partial(g3, maps[4]);
    return r;
}

PSphereElement pent_eval(const PSphereElement& g4) {
    // Termwise, pent in p_5 is K_4 of pent in t_4 applied to the normalized
    // representative.
    return dkho::K(pent_eval(g4.rep()));
}

namespace {
std::mutex g_pent_mutex;
std::map<int, linalg::Matrix>& pent_matrix_cache() {
    static std::map<int, linalg::Matrix> c;
    return c;
}

const linalg::Matrix& pent_matrix(int degree) {
    std::lock_guard<std::mutex> lock(g_pent_mutex);
    auto it = pent_matrix_cache().find(degree);
    if (it != pent_matrix_cache().end()) return it->second;
    auto xy = ncalg::xy_alphabet();
    std::vector<ncalg::Word> basis = freelie::lyndon_basis(xy, degree);
    linalg::Matrix m(dkho::tn_dim(4, degree), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        LieElement phi(xy);
        phi.add_coord(basis[j], 1);
        linalg::Vec col = dkho::tn_to_vec(pent_eval(dkho::phi_in_t3(phi)), degree);
        for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
    }
    return pent_matrix_cache().emplace(degree, std::move(m)).first->second;
}
} // namespace

linalg::Vec pent_vec_of_phi(const LieElement& phi, int degree) {
    const linalg::Matrix& m = pent_matrix(degree);
    linalg::Vec coords = freelie::lie_to_vec(phi, degree);
    linalg::Vec out(m.rows(), Scalar(0));
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] == 0) continue;
        for (std::size_t i = 0; i < m.rows(); ++i) out[i] += m.at(i, j) * coords[j];
    }
    return out;
}

CombedLie pent_of_phi(const LieElement& phi) {
    CombedLie r(4);
    for (int d = std::max(1, phi.min_degree()); d <= phi.max_degree(); ++d)
        r += dkho::tn_from_vec(4, d, pent_vec_of_phi(phi.homogeneous_part(d), d));
    return r;
}

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::GRT: return "grt";
        case Flavor::DMR: return "dmr";
        case Flavor::KRV: return "krv";
    }
    return "?";
}

dkho::SubSpec flavor_brun(Flavor f) {
    switch (f) {
        case Flavor::GRT: return dkho::SubSpec::brun();
        case Flavor::DMR: return dkho::SubSpec::brun_mixed(1);
        case Flavor::KRV: return dkho::SubSpec::brun_mixed(2);
    }
    throw std::logic_error("unreachable");
}

linalg::Subspace flavor_gamma(Flavor f, int k, int degree) {
    return dkho::tn_subspace(4, dkho::SubSpec::lcs(k + 1, flavor_brun(f)), degree);
}

linalg::Vec pent_k_eval(const LieElement& phi, Flavor f, int k) {
    if (phi.is_zero()) return {};
    if (phi.min_degree() != phi.max_degree())
        throw std::invalid_argument("pent_k_eval needs a homogeneous element");
    const int d = phi.min_degree();
    if (d < 2) throw std::invalid_argument("pent_k_eval needs degree >= 2");
    return flavor_gamma(f, k, d).reduce(pent_vec_of_phi(phi, d));
}

namespace {

LieElement swap_letters(const LieElement& phi) {
    auto xy = phi.alph();
    return freelie::substitute(phi, {LieElement::generator(xy, 1), LieElement::generator(xy, 0)});
}

LieElement hexagon_defect(const LieElement& phi) {
    auto xy = phi.alph();
    LieElement x0 = LieElement::generator(xy, 0);
    LieElement x1 = LieElement::generator(xy, 1);
    LieElement xoo = -(x0 + x1);
    return phi + freelie::substitute(phi, {x1, xoo}) + freelie::substitute(phi, {xoo, x0});
}

} // namespace

Grt1Report grt1_membership(const LieElement& phi) {
    Grt1Report r;
    r.antisym_defect = phi + swap_letters(phi);
    r.hexagon_defect = hexagon_defect(phi);
    r.pentagon_defect = pent_of_phi(phi);
    r.antisym = r.antisym_defect.is_zero();
    r.hexagon = r.hexagon_defect.is_zero();
    r.pentagon = r.pentagon_defect.is_zero();
    return r;
}

std::string system_name(System s) {
    switch (s) {
        case System::Grt1: return "grt1";
        case System::PentK: return "pentk";
        case System::Dmr0: return "dmr0";
        case System::KrvSymPair: return "krvsym";
        case System::GrtEm: return "grtem";
    }
    return "?";
}

namespace {

void append(linalg::Vec& into, const linalg::Vec& v) { into.insert(into.end(), v.begin(), v.end()); }

linalg::Vec nc_to_vec(const ncalg::NCPoly& p, int degree) {
    std::vector<ncalg::Word> words = freelie::all_words(p.alph()->size(), degree);
    linalg::Vec v(words.size(), Scalar(0));
    for (std::size_t i = 0; i < words.size(); ++i) v[i] = p.coeff(words[i]);
    return v;
}

// sd(phi) = (phi(-x0-x1, x0), phi(-x0-x1, x1)); the first th:krv equation is
// the speciality defect [x0, a0] + [x1, a1].
LieElement krv_eq1_defect(const LieElement& phi) {
    auto xy = phi.alph();
    LieElement x0 = LieElement::generator(xy, 0);
    LieElement x1 = LieElement::generator(xy, 1);
    LieElement xoo = -(x0 + x1);
    LieElement a0 = freelie::substitute(phi, {xoo, x0});
    LieElement a1 = freelie::substitute(phi, {xoo, x1});
    return freelie::bracket(x0, a0) + freelie::bracket(x1, a1);
}

struct GrtEmDefect {
    ncalg::NCPoly eq1a, eq1b;
    LieElement eq2;
};

GrtEmDefect grt_em_defect(const LieElement& psi) {
    auto xy = psi.alph();
    GrtEmDefect d;
    ncalg::NCPoly p = freelie::to_ncpoly(psi);
    ncalg::NCPoly x = ncalg::NCPoly::letter(xy, 0);
    ncalg::NCPoly y = ncalg::NCPoly::letter(xy, 1);
    ncalg::NCPoly zero(xy);
    d.eq1a = ncalg::subst_assoc(p, {y, zero}) - ncalg::subst_assoc(p, {x + y, zero});
    ncalg::NCPoly dy = ncalg::d_right(p, 1);
    d.eq1b = ncalg::subst_assoc(dy, {x, y}) + ncalg::subst_assoc(dy, {y, zero}) -
             ncalg::subst_assoc(dy, {x + y, zero}) - ncalg::reduced_coaction(p);
    LieElement gx = LieElement::generator(xy, 0);
    LieElement gy = LieElement::generator(xy, 1);
    d.eq2 = freelie::bracket(gx, freelie::substitute(psi, {gy, gx})) +
            freelie::bracket(gy, freelie::substitute(psi, {gx, gy}));
    return d;
}

} // namespace

linalg::Subspace solve_space(System system, int weight, const SolveOptions& opts) {
    if (weight < 2) throw std::invalid_argument("solve_space needs weight >= 2");
    auto xy = ncalg::xy_alphabet();
    std::vector<ncalg::Word> basis = freelie::lyndon_basis(xy, weight);
    std::vector<linalg::Vec> cols;
    cols.reserve(basis.size());
    for (const auto& w : basis) {
        LieElement phi(xy);
        phi.add_coord(w, 1);
        linalg::Vec col;
        switch (system) {
            case System::Grt1: {
                Grt1Report r = grt1_membership(phi);
                append(col, freelie::lie_to_vec(r.antisym_defect, weight));
                append(col, freelie::lie_to_vec(r.hexagon_defect, weight));
                append(col, dkho::tn_to_vec(r.pentagon_defect, weight));
                break;
            }
            case System::PentK:
                col = pent_k_eval(phi, opts.flavor, opts.k);
                break;
            case System::Dmr0:
                col = dmr::dmr0_defect_vec(phi, weight);
                break;
            case System::KrvSymPair:
                append(col, freelie::lie_to_vec(krv_eq1_defect(phi), weight + 1));
                append(col, pent_k_eval(phi, Flavor::KRV, 1));
                break;
            case System::GrtEm: {
                GrtEmDefect d = grt_em_defect(phi);
                append(col, nc_to_vec(d.eq1a, weight));
                if (weight >= 2) append(col, nc_to_vec(d.eq1b, weight - 1));
                append(col, freelie::lie_to_vec(d.eq2, weight + 1));
                break;
            }
        }
        cols.push_back(std::move(col));
    }
    const std::size_t nrows = cols.empty() ? 0 : cols[0].size();
    linalg::Matrix m(nrows, basis.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i];
    return linalg::Subspace(basis.size(), linalg::kernel(m));
}

std::vector<LieElement> solve_basis(System system, int weight, const SolveOptions& opts) {
    linalg::Subspace s = solve_space(system, weight, opts);
    std::vector<LieElement> out;
    for (std::size_t i = 0; i < s.dim(); ++i)
        out.push_back(freelie::lie_from_vec(ncalg::xy_alphabet(), weight, s.basis().row(i)));
    return out;
}

std::vector<AuditRow> implication_audit(int max_weight, int max_k) {
    std::vector<AuditRow> rows;
    for (int w = 2; w <= max_weight; ++w) {
        std::map<std::pair<int, int>, linalg::Subspace> sols; // (flavor, k)
        for (int k = 1; k <= max_k; ++k) {
            SolveOptions o;
            o.k = k;
            o.flavor = Flavor::GRT;
            sols[{0, k}] = solve_space(System::PentK, w, o);
            o.flavor = Flavor::DMR;
            sols[{1, k}] = solve_space(System::PentK, w, o);
            o.flavor = Flavor::KRV;
            sols[{2, k}] = solve_space(System::PentK, w, o);
        }
        for (int k = 1; k <= max_k; ++k) {
            AuditRow r;
            r.weight = w;
            r.k = k;
            r.dim_grt = sols[{0, k}].dim();
            r.dim_dmr = sols[{1, k}].dim();
            r.dim_krv = sols[{2, k}].dim();
            r.grt_in_dmr = sols[{1, k}].contains(sols[{0, k}]);
            r.dmr_in_krv = sols[{2, k}].contains(sols[{1, k}]);
            r.grt_k_monotone = k == 1 || sols[{0, k - 1}].contains(sols[{0, k}]);
            r.dmr_k_monotone = k == 1 || sols[{1, k - 1}].contains(sols[{1, k}]);
            r.krv_k_monotone = k == 1 || sols[{2, k - 1}].contains(sols[{2, k}]);
            rows.push_back(r);
        }
    }
    return rows;
}

} // namespace dkpent::pentagon
