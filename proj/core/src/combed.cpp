#include "dkpent/combed.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dkpent::dkho {

ncalg::AlphabetPtr component_alphabet(int s) {
    std::vector<std::string> names;
    for (int k = 1; k < s; ++k) names.push_back("t" + std::to_string(k) + std::to_string(s));
    return ncalg::alphabet(names);
}

CombedLie CombedLie::generator(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || i == j || j > n) throw std::invalid_argument("bad generator indices");
    CombedLie g(n);
    g.comp_.emplace(j, LieElement::generator(component_alphabet(j), static_cast<Letter>(i - 1)));
    return g;
}

LieElement CombedLie::component(int s) const {
    auto it = comp_.find(s);
    return it == comp_.end() ? LieElement(component_alphabet(s)) : it->second;
}

void CombedLie::add_component(int s, const LieElement& e) {
    if (e.is_zero()) return;
    auto it = comp_.find(s);
    if (it == comp_.end()) {
        comp_.emplace(s, e);
    } else {
        it->second += e;
        if (it->second.is_zero()) comp_.erase(it);
    }
}

CombedLie& CombedLie::operator+=(const CombedLie& o) {
    if (n_ == 0) n_ = o.n_;
    if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("strand-count mismatch");
    for (const auto& [s, e] : o.comp_) add_component(s, e);
    return *this;
}

CombedLie& CombedLie::operator-=(const CombedLie& o) {
    if (n_ == 0) n_ = o.n_;
    if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("strand-count mismatch");
    for (const auto& [s, e] : o.comp_) add_component(s, -e);
    return *this;
}

CombedLie& CombedLie::operator*=(const Scalar& c) {
    if (c == 0) {
        comp_.clear();
        return *this;
    }
    for (auto& [s, e] : comp_) e *= c;
    return *this;
}

CombedLie CombedLie::operator-() const {
    CombedLie r(n_);
    for (const auto& [s, e] : comp_) r.comp_.emplace(s, -e);
    return r;
}

int CombedLie::min_degree() const {
    int d = -1;
    for (const auto& [s, e] : comp_) {
        int m = e.min_degree();
        if (m >= 0 && (d < 0 || m < d)) d = m;
    }
    return d;
}

int CombedLie::max_degree() const {
    int d = -1;
    for (const auto& [s, e] : comp_) d = std::max(d, e.max_degree());
    return d;
}

CombedLie CombedLie::homogeneous_part(int degree) const {
    CombedLie r(n_);
    for (const auto& [s, e] : comp_) r.add_component(s, e.homogeneous_part(degree));
    return r;
}

std::string CombedLie::str() const {
    if (comp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, e] : comp_) {
        os << (first ? "" : " + ") << "{s=" << s << ": " << e.str() << "}";
        first = false;
    }
    return os.str();
}

LieElement generator_action(int i, int j, const LieElement& target, int s) {
    if (i > j) std::swap(i, j);
    if (j >= s) throw std::invalid_argument("generator_action: need i, j < s");
    auto a = component_alphabet(s);
    ncalg::NCPoly src = freelie::to_ncpoly(target);
    ncalg::NCPoly im_i = ncalg::commutator(ncalg::NCPoly::letter(a, static_cast<Letter>(i - 1)),
                                           ncalg::NCPoly::letter(a, static_cast<Letter>(j - 1)));
    ncalg::NCPoly im_j = -im_i;
    ncalg::NCPoly out(a);
    for (const auto& [w, c] : src.terms()) {
        for (std::size_t p = 0; p < w.size(); ++p) {
            const ncalg::NCPoly* im = nullptr;
            if (w[p] == static_cast<Letter>(i - 1)) im = &im_i;
            else if (w[p] == static_cast<Letter>(j - 1)) im = &im_j;
            if (!im) continue;
            for (const auto& [iw, ic] : im->terms()) {
                Word nw;
                nw.reserve(w.size() + 1);
                nw.insert(nw.end(), w.begin(), w.begin() + p);
                nw.insert(nw.end(), iw.begin(), iw.end());
                nw.insert(nw.end(), w.begin() + p + 1, w.end());
                out.add_term(nw, c * ic);
            }
        }
    }
    return freelie::as_lie(out);
}

namespace {

// Action of a component-s1 element on a component-s fiber element, evaluated
// through the Lyndon bracketing so that [u, v] acts as the commutator of the
// actions.
LieElement act_bracketing(const Word& w, int s1, const LieElement& target, int s) {
    if (w.size() == 1) return generator_action(static_cast<int>(w[0]) + 1, s1, target, s);
    auto [u, v] = freelie::standard_factorization(w);
    return act_bracketing(u, s1, act_bracketing(v, s1, target, s), s) -
           act_bracketing(v, s1, act_bracketing(u, s1, target, s), s);
}

LieElement act(const LieElement& outer, int s1, const LieElement& target, int s) {
    LieElement acc(component_alphabet(s));
    for (const auto& [w, c] : outer.coords()) acc += act_bracketing(w, s1, target, s) * c;
    return acc;
}

} // namespace

CombedLie bracket(const CombedLie& a, const CombedLie& b) {
    if (a.n() != 0 && b.n() != 0 && a.n() != b.n()) throw std::invalid_argument("strand-count mismatch");
    CombedLie r(a.n() ? a.n() : b.n());
    for (const auto& [s1, e1] : a.components())
        for (const auto& [s2, e2] : b.components()) {
            if (s1 == s2) r.add_component(s1, freelie::bracket(e1, e2));
            else if (s1 < s2) r.add_component(s2, act(e1, s1, e2, s2));
            else r.add_component(s1, -act(e2, s2, e1, s1));
        }
    return r;
}

namespace {
std::mutex g_basis_mutex;
std::map<std::pair<int, int>, std::vector<std::pair<int, Word>>>& basis_cache() {
    static std::map<std::pair<int, int>, std::vector<std::pair<int, Word>>> c;
    return c;
}
} // namespace

const std::vector<std::pair<int, Word>>& tn_basis(int n, int degree) {
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto it = basis_cache().find({n, degree});
    if (it != basis_cache().end()) return it->second;
    std::vector<std::pair<int, Word>> basis;
    for (int s = 2; s <= n; ++s)
        for (const Word& w : freelie::lyndon_words(static_cast<std::size_t>(s - 1), degree))
            basis.emplace_back(s, w);
    return basis_cache().emplace(std::make_pair(n, degree), std::move(basis)).first->second;
}

std::size_t tn_dim(int n, int degree) { return tn_basis(n, degree).size(); }

linalg::Vec tn_to_vec(const CombedLie& e, int degree) {
    const auto& basis = tn_basis(e.n(), degree);
    linalg::Vec v(basis.size(), Scalar(0));
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = e.component(basis[i].first).coord(basis[i].second);
    return v;
}

CombedLie tn_from_vec(int n, int degree, const linalg::Vec& v) {
    const auto& basis = tn_basis(n, degree);
    if (basis.size() != v.size()) throw std::invalid_argument("coordinate length mismatch");
    CombedLie e(n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (v[i] == 0) continue;
        LieElement t(component_alphabet(basis[i].first));
        t.add_coord(basis[i].second, v[i]);
        e.add_component(basis[i].first, t);
    }
    return e;
}

CombedLie tn_center(int n) {
    CombedLie c(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) c += CombedLie::generator(n, i, j);
    return c;
}

} // namespace dkpent::dkho
