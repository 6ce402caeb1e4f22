#include "dkpent/subspace.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dkpent::dkho {

std::string SubSpec::key() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Full: os << "full"; break;
        case Kind::Brun: os << "brun"; break;
        case Kind::BrunMixed: os << "brun_m" << m; break;
        case Kind::Dk: os << "dk_m" << m; break;
        case Kind::KernelList:
            os << "ker";
            for (int i : kernels) os << "_" << i;
            break;
        case Kind::Ideal:
            os << "ideal";
            for (auto [a, b] : ideal_gens) os << "_t" << a << b;
            break;
        case Kind::Lcs: os << "lcs" << k << "(" << inner->key() << ")"; break;
    }
    return os.str();
}

linalg::Matrix pr_matrix(int n, int i, int degree) {
    const auto& basis = tn_basis(n, degree);
    const std::size_t target = tn_dim(n - 1, degree);
    linalg::Matrix m(target, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        CombedLie e(n);
        LieElement t(component_alphabet(basis[c].first));
        t.add_coord(basis[c].second, 1);
        e.add_component(basis[c].first, t);
        linalg::Vec col = tn_to_vec(pr(e, i), degree);
        for (std::size_t r = 0; r < target; ++r) m.at(r, c) = col[r];
    }
    return m;
}

namespace {

std::mutex g_sub_mutex;
std::map<std::tuple<int, std::string, int>, linalg::Subspace>& sub_cache() {
    static std::map<std::tuple<int, std::string, int>, linalg::Subspace> c;
    return c;
}

linalg::Subspace kernel_of_deletions(int n, const std::vector<int>& is, int degree) {
    const std::size_t dim = tn_dim(n, degree);
    std::optional<linalg::Subspace> acc;
    for (int i : is) {
        linalg::Subspace ker(dim, linalg::kernel(pr_matrix(n, i, degree)));
        acc = acc ? acc->intersect(ker) : ker;
    }
    if (!acc) acc = linalg::Subspace(dim, [&] {
        linalg::Matrix id(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) id.at(j, j) = 1;
        return id;
    }());
    return *acc;
}

linalg::Subspace compute(int n, const SubSpec& spec, int degree);

linalg::Subspace cached(int n, const SubSpec& spec, int degree) {
    const auto key = std::make_tuple(n, spec.key(), degree);
    {
        std::lock_guard<std::mutex> lock(g_sub_mutex);
        auto it = sub_cache().find(key);
        if (it != sub_cache().end()) return it->second;
    }
    linalg::Subspace s = compute(n, spec, degree);
    std::lock_guard<std::mutex> lock(g_sub_mutex);
    return sub_cache().emplace(key, std::move(s)).first->second;
}

linalg::Subspace compute(int n, const SubSpec& spec, int degree) {
    const std::size_t dim = tn_dim(n, degree);
    switch (spec.kind) {
        case SubSpec::Kind::Full: {
            linalg::Matrix id(dim, dim);
            for (std::size_t j = 0; j < dim; ++j) id.at(j, j) = 1;
            return linalg::Subspace(dim, std::move(id));
        }
        case SubSpec::Kind::Brun: {
            std::vector<int> is;
            for (int i = 1; i <= n; ++i) is.push_back(i);
            return kernel_of_deletions(n, is, degree);
        }
        case SubSpec::Kind::BrunMixed: {
            std::vector<int> is;
            for (int i = spec.m + 1; i <= n; ++i) is.push_back(i);
            return kernel_of_deletions(n, is, degree);
        }
        case SubSpec::Kind::Dk: {
            // Kernel of pr^{m+1} o ... o pr^n (deleting the moving strands).
            const auto& basis = tn_basis(n, degree);
            const std::size_t target = tn_dim(spec.m, degree);
            linalg::Matrix m(target, basis.size());
            for (std::size_t c = 0; c < basis.size(); ++c) {
                CombedLie e(n);
                LieElement t(component_alphabet(basis[c].first));
                t.add_coord(basis[c].second, 1);
                e.add_component(basis[c].first, t);
                for (int i = n; i > spec.m; --i) e = pr(e, i);
                linalg::Vec col = tn_to_vec(e, degree);
                for (std::size_t r = 0; r < target; ++r) m.at(r, c) = col[r];
            }
            return linalg::Subspace(dim, linalg::kernel(m));
        }
        case SubSpec::Kind::KernelList:
            return kernel_of_deletions(n, spec.kernels, degree);
        case SubSpec::Kind::Ideal: {
            // I_d = span(generators at degree d) + [t_n(1), I_{d-1}].
            linalg::Matrix rows(0, dim);
            if (degree == 1)
                for (auto [a, b] : spec.ideal_gens)
                    rows.push_row(tn_to_vec(CombedLie::generator(n, a, b), 1));
            if (degree > 1) {
                linalg::Subspace lower = cached(n, spec, degree - 1);
                const auto& gens1 = tn_basis(n, 1);
                for (std::size_t g = 0; g < gens1.size(); ++g) {
                    CombedLie x(n);
                    LieElement t(component_alphabet(gens1[g].first));
                    t.add_coord(gens1[g].second, 1);
                    x.add_component(gens1[g].first, t);
                    for (std::size_t r = 0; r < lower.dim(); ++r) {
                        CombedLie y = tn_from_vec(n, degree - 1, lower.basis().row(r));
                        rows.push_row(tn_to_vec(bracket(x, y), degree));
                    }
                }
            }
            return linalg::Subspace(dim, std::move(rows));
        }
        case SubSpec::Kind::Lcs: {
            if (spec.k <= 1) return cached(n, *spec.inner, degree);
            SubSpec prev = SubSpec::lcs(spec.k - 1, *spec.inner);
            linalg::Matrix rows(0, dim);
            for (int a = 1; a < degree; ++a) {
                const int b = degree - a;
                linalg::Subspace sa = cached(n, *spec.inner, a);
                linalg::Subspace sb = cached(n, prev, b);
                for (std::size_t i = 0; i < sa.dim(); ++i)
                    for (std::size_t j = 0; j < sb.dim(); ++j) {
                        CombedLie u = tn_from_vec(n, a, sa.basis().row(i));
                        CombedLie v = tn_from_vec(n, b, sb.basis().row(j));
                        rows.push_row(tn_to_vec(bracket(u, v), degree));
                    }
            }
            return linalg::Subspace(dim, std::move(rows));
        }
    }
    throw std::logic_error("unreachable subspace kind");
}

} // namespace

linalg::Subspace tn_subspace(int n, const SubSpec& spec, int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    return cached(n, spec, degree);
}

linalg::Vec mod_reduce(const CombedLie& e, const linalg::Subspace& sub, int degree) {
    return sub.reduce(tn_to_vec(e, degree));
}

bool is_subalgebra(int n, const SubSpec& spec, int max_degree) {
    for (int a = 1; a < max_degree; ++a)
        for (int b = a; a + b <= max_degree; ++b) {
            linalg::Subspace sa = tn_subspace(n, spec, a);
            linalg::Subspace sb = tn_subspace(n, spec, b);
            linalg::Subspace sab = tn_subspace(n, spec, a + b);
            for (std::size_t i = 0; i < sa.dim(); ++i)
                for (std::size_t j = 0; j < sb.dim(); ++j) {
                    CombedLie u = tn_from_vec(n, a, sa.basis().row(i));
                    CombedLie v = tn_from_vec(n, b, sb.basis().row(j));
                    if (!sab.contains(tn_to_vec(bracket(u, v), a + b))) return false;
                }
        }
    return true;
}

linalg::Subspace free_ideal(const ncalg::AlphabetPtr& a, const std::vector<ncalg::Letter>& gens, int degree) {
    const std::size_t dim = freelie::lyndon_basis(a, degree).size();
    linalg::Matrix rows(0, dim);
    if (degree == 1)
        for (ncalg::Letter g : gens) rows.push_row(freelie::lie_to_vec(LieElement::generator(a, g), 1));
    if (degree > 1) {
        linalg::Subspace lower = free_ideal(a, gens, degree - 1);
        for (std::size_t l = 0; l < a->size(); ++l)
            for (std::size_t r = 0; r < lower.dim(); ++r) {
                LieElement x = LieElement::generator(a, static_cast<ncalg::Letter>(l));
                LieElement y = freelie::lie_from_vec(a, degree - 1, lower.basis().row(r));
                rows.push_row(freelie::lie_to_vec(freelie::bracket(x, y), degree));
            }
    }
    return linalg::Subspace(dim, std::move(rows));
}

linalg::Subspace free_bracket_span(const ncalg::AlphabetPtr& a,
                                   const std::function<linalg::Subspace(int)>& left,
                                   const std::function<linalg::Subspace(int)>& right, int degree) {
    const std::size_t dim = freelie::lyndon_basis(a, degree).size();
    linalg::Matrix rows(0, dim);
    for (int p = 1; p < degree; ++p) {
        const int q = degree - p;
        linalg::Subspace sp = left(p);
        linalg::Subspace sq = right(q);
        for (std::size_t i = 0; i < sp.dim(); ++i)
            for (std::size_t j = 0; j < sq.dim(); ++j) {
                LieElement u = freelie::lie_from_vec(a, p, sp.basis().row(i));
                LieElement v = freelie::lie_from_vec(a, q, sq.basis().row(j));
                rows.push_row(freelie::lie_to_vec(freelie::bracket(u, v), degree));
            }
    }
    return linalg::Subspace(dim, std::move(rows));
}

ncalg::AlphabetPtr wi_alphabet() { return ncalg::alphabet({"t12", "t23", "t24"}); }
ncalg::AlphabetPtr wj_alphabet() { return ncalg::alphabet({"t14", "t24", "t34"}); }

linalg::Subspace wi_subspace(int degree) {
    auto a = wi_alphabet();
    const std::size_t dim = freelie::lyndon_basis(a, degree).size();
    linalg::Matrix rows(0, dim);
    // p~_{k,l} = ad(t23)^{k-1} ad(t24)^{l-1} [t23, t24], k + l = degree.
    for (int l = 1; l < degree; ++l) {
        const int k = degree - l;
        LieElement e = freelie::bracket(LieElement::generator(a, 1), LieElement::generator(a, 2));
        for (int i = 1; i < l; ++i) e = freelie::bracket(LieElement::generator(a, 2), e);
        for (int i = 1; i < k; ++i) e = freelie::bracket(LieElement::generator(a, 1), e);
        rows.push_row(freelie::lie_to_vec(e, degree));
    }
    return linalg::Subspace(dim, std::move(rows));
}

linalg::Subspace wj_subspace(int degree) {
    auto a = wj_alphabet();
    const std::size_t dim = freelie::lyndon_basis(a, degree).size();
    linalg::Matrix rows(0, dim);
    LieElement e = LieElement::generator(a, 2); // t34
    for (int i = 1; i < degree; ++i) e = freelie::bracket(LieElement::generator(a, 1), e);
    rows.push_row(freelie::lie_to_vec(e, degree));
    return linalg::Subspace(dim, std::move(rows));
}

} // namespace dkpent::dkho
