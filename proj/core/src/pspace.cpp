#include "dkpent/pspace.hpp"

#include "dkpent/pentagon.hpp"

#include <sstream>
#include <stdexcept>

namespace dkpent::dmr {

void PPoly::add_term(const Composition& a, const Composition& b, const Scalar& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar PPoly::coeff(const Composition& a, const Composition& b) const {
    auto it = terms_.find(std::make_pair(a, b));
    return it == terms_.end() ? Scalar(0) : it->second;
}

PPoly& PPoly::operator+=(const PPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

PPoly& PPoly::operator-=(const PPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

PPoly& PPoly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

namespace {
std::string comp_str(const Composition& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
    return os.str();
}
} // namespace

std::string PPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << scalar_to_string(c) << "*p" << comp_str(k.first) << comp_str(k.second);
        first = false;
    }
    return os.str();
}

ncalg::AlphabetPtr zxy_alphabet() { return ncalg::alphabet({"z", "x", "y"}); }

ncalg::NCPoly p_monomial(const Composition& a, const Composition& b) {
    auto zxy = zxy_alphabet();
    ncalg::Word w;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        for (int i = 1; i < *it; ++i) w.push_back(0);
        w.push_back(1);
    }
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        for (int i = 1; i < *it; ++i) w.push_back(0);
        w.push_back(2);
    }
    return ncalg::NCPoly(zxy, w, 1);
}

namespace {

// A monomial over (z, x, y) is a p_{a,b} basis word iff it is empty or ends
// in x or y with every x before every y.
bool parse_p_monomial(const ncalg::Word& w, Composition& a, Composition& b) {
    a.clear();
    b.clear();
    if (w.empty()) return true;
    if (w.back() == 0) return false;
    int zeros = 0;
    bool seen_y = false;
    std::vector<int> xs, ys;
    for (ncalg::Letter l : w) {
        if (l == 0) {
            ++zeros;
        } else if (l == 1) {
            if (seen_y) return false;
            xs.push_back(zeros + 1);
            zeros = 0;
        } else {
            seen_y = true;
            ys.push_back(zeros + 1);
            zeros = 0;
        }
    }
    if (zeros != 0) return false;
    // Blocks were read leftmost first = a_k, ..., a_1.
    a.assign(xs.rbegin(), xs.rend());
    b.assign(ys.rbegin(), ys.rend());
    return true;
}

} // namespace

PPoly pi_p(const ncalg::NCPoly& p) {
    PPoly r;
    for (const auto& [w, c] : p.terms()) {
        Composition a, b;
        if (parse_p_monomial(w, a, b)) r.add_term(a, b, c);
    }
    return r;
}

ncalg::TensorPoly p_to_tensor(const PPoly& p) {
    ncalg::TensorPoly r(ncalg::y_alphabet());
    for (const auto& [k, c] : p.terms()) r.add_term(to_y_word(k.first), to_y_word(k.second), c);
    return r;
}

PPoly lambda_map(const PPoly& p, bool reduced) {
    PPoly r;
    for (const auto& [key, c] : p.terms()) {
        const auto& [a, b] = key;
        if (a.empty() || b.empty()) {
            r.add_term(a, b, c); // identity on the pure sectors
            continue;
        }
        ncalg::NCPoly ya(ncalg::y_alphabet(), to_y_word(a), 1);
        ncalg::TensorPoly da = stuffle_coproduct(ya);
        for (const auto& [pair_words, m] : da.terms()) {
            Composition a1 = from_y_word(pair_words.first);
            Composition a2 = from_y_word(pair_words.second);
            if (reduced && a2.empty()) continue; // drop the a (x) 1 term
            Composition left = a1;
            left.insert(left.end(), b.begin(), b.end());
            r.add_term(left, a2, c * m);
        }
    }
    return r;
}

freelie::LieElement ab_i(const freelie::LieElement& psi_xy) {
    auto ia = dkho::wi_alphabet(); // {t12, t23, t24}
    freelie::LieElement t23 = freelie::LieElement::generator(ia, 1);
    freelie::LieElement t24 = freelie::LieElement::generator(ia, 2);
    return freelie::substitute(psi_xy, {t23, -(t23 + t24)});
}

freelie::LieElement diag_123_124(const freelie::LieElement& psi_xy) {
    auto ia = dkho::wi_alphabet();
    freelie::LieElement t12 = freelie::LieElement::generator(ia, 0);
    freelie::LieElement t23 = freelie::LieElement::generator(ia, 1);
    freelie::LieElement t24 = freelie::LieElement::generator(ia, 2);
    return freelie::substitute(psi_xy, {t12, t23}) + freelie::substitute(psi_xy, {t12, t24});
}

freelie::LieElement pent1_dmr_fiber(const freelie::LieElement& psi_xy) {
    std::vector<dkho::CombedLie> images = {dkho::CombedLie::generator(3, 1, 2),
                                           dkho::CombedLie::generator(3, 2, 3)};
    dkho::CombedLie g3 = freelie::substitute_hom(
        psi_xy, images, [](const dkho::CombedLie& a, const dkho::CombedLie& b) { return dkho::bracket(a, b); });
    dkho::CombedLie value = pentagon::pent_eval(g3);
    return dkho::fiber_coords(value, 2);
}

DiagramReport dmr_diagram_check(const freelie::LieElement& psi, bool with_corr, bool reduced_lambda) {
    DiagramReport rep;
    auto ia = dkho::wi_alphabet();

    freelie::LieElement total = diag_123_124(psi) + pent1_dmr_fiber(psi) - ab_i(psi);
    // pi reads (t12, t23, t24) as (z, x, y).
    ncalg::NCPoly assoc = freelie::to_ncpoly(total);
    ncalg::NCPoly zxy(zxy_alphabet());
    for (const auto& [w, c] : assoc.terms()) zxy.add_term(w, c); // same letter order
    PPoly projected = pi_p(zxy);
    ncalg::TensorPoly left = p_to_tensor(lambda_map(projected, reduced_lambda));

    ncalg::NCPoly psi_nc = freelie::to_ncpoly(psi);
    ncalg::TensorPoly right = stuffle_coproduct(with_corr ? psi_star(psi_nc) : pi_y(psi_nc));

    if (with_corr) {
        // corr~ adds p o Delta_*((a)_corr + (b)_corr)/2 where a = pr_3(total),
        // b = pr_4(total) are the two outer components of the split sequence,
        // read as elements of k<x0, x1>.
        auto x = ncalg::x_alphabet();
        ncalg::NCPoly a_part(x), b_part(x);
        for (const auto& [w, c] : assoc.terms()) {
            bool has_t23 = false, has_t24 = false;
            for (ncalg::Letter l : w) {
                if (l == 1) has_t23 = true;
                if (l == 2) has_t24 = true;
            }
            if (!has_t23) { // pr_3 kills t23, keeps (t12, t24) as (x0, x1)
                ncalg::Word wx;
                for (ncalg::Letter l : w) wx.push_back(l == 0 ? 0 : 1);
                a_part.add_term(wx, c);
            }
            if (!has_t24) { // pr_4 kills t24, keeps (t12, t23) as (x0, x1)
                ncalg::Word wx;
                for (ncalg::Letter l : w) wx.push_back(l == 0 ? 0 : 1);
                b_part.add_term(wx, c);
            }
        }
        ncalg::NCPoly corr_sum = corr(a_part) + corr(b_part);
        left += stuffle_coproduct(corr_sum) * Scalar(1, 2);
    }

    rep.left = std::move(left);
    rep.right = std::move(right);
    rep.pass = rep.left == rep.right;
    return rep;
}

} // namespace dkpent::dmr
