#include <doctest.h>

#include "dkpent/pspace.hpp"
#include "dkpent/rng.hpp"

using namespace dkpent;
using namespace dkpent::dmr;
using freelie::LieElement;
using ncalg::NCPoly;
using ncalg::Word;

namespace {

LieElement sigma3() {
    auto xy = ncalg::xy_alphabet();
    LieElement x = LieElement::generator(xy, 0), y = LieElement::generator(xy, 1);
    return freelie::bracket(x, freelie::bracket(x, y)) - freelie::bracket(y, freelie::bracket(y, x));
}

NCPoly xword(std::initializer_list<ncalg::Letter> ls) {
    return NCPoly(ncalg::x_alphabet(), Word(ls), 1);
}

} // namespace

TEST_CASE("pi_Y, corr, psi_star") {
    NCPoly p = pi_y(xword({0, 1}));
    CHECK(p.coeff(Word{1}) == 1); // y_2
    CHECK(pi_y(xword({1, 0})).is_zero());
    CHECK(pi_y(NCPoly::unit(ncalg::x_alphabet())) == NCPoly::unit(ncalg::y_alphabet()));

    NCPoly c = corr(xword({0, 1}));
    CHECK(c.coeff(Word{0, 0}) == Scalar(-1) / 2); // -(1/2) y_1 y_1
    CHECK(corr(NCPoly::unit(ncalg::x_alphabet())).is_zero());
    CHECK(corr(xword({1})).coeff(Word{0}) == 1);

    // pi_Y is a retraction of the embedding.
    rng::Gen g(73);
    for (int t = 0; t < 8; ++t) {
        Composition a;
        for (int i = 0, k = g.uniform(1, 3); i < k; ++i) a.push_back(g.uniform(1, 3));
        NCPoly yw(ncalg::y_alphabet(), to_y_word(a), 1);
        CHECK(pi_y(y_to_x(yw)) == yw);
    }
}

TEST_CASE("stuffle coproduct values") {
    auto y = ncalg::y_alphabet();
    NCPoly y1(y, Word{0}, 1), y2(y, Word{1}, 1);
    ncalg::TensorPoly d1 = stuffle_coproduct(y1);
    CHECK(d1.coeff({0}, {}) == 1);
    CHECK(d1.coeff({}, {0}) == 1);
    CHECK(d1.terms().size() == 2);

    ncalg::TensorPoly d2 = stuffle_coproduct(y2);
    CHECK(d2.coeff({1}, {}) == 1);
    CHECK(d2.coeff({}, {1}) == 1);
    CHECK(d2.coeff({0}, {0}) == 1);
    CHECK(d2.terms().size() == 3);

    ncalg::TensorPoly d11 = stuffle_coproduct(y1 * y1);
    CHECK(d11.coeff({0, 0}, {}) == 1);
    CHECK(d11.coeff({0}, {0}) == 2); // two mixed splits
    CHECK(d11.coeff({}, {0, 0}) == 1);
}

TEST_CASE("stuffle product enumerations") {
    SUBCASE("(1) * (1)") {
        auto r = stuffle_collapsed({1}, {1});
        REQUIRE(r.size() == 2);
        CHECK(r[0].first == Composition{1, 1});
        CHECK(r[0].second == 2);
        CHECK(r[1].first == Composition{2});
        CHECK(r[1].second == 1);
    }
    SUBCASE("empty unit") {
        auto r = stuffle_product({2, 1}, {});
        CHECK(r.merged.size() == 1);
        CHECK(r.merged[0].first == Composition{2, 1});
        CHECK(r.xy.empty());
        CHECK(r.yx.empty());
    }
    SUBCASE("(2) * (1) collapsed") {
        auto r = stuffle_collapsed({2}, {1});
        int total = 0;
        bool has21 = false, has12 = false, has3 = false;
        for (const auto& [c, m] : r) {
            total += m;
            if (c == Composition{2, 1}) has21 = true;
            if (c == Composition{1, 2}) has12 = true;
            if (c == Composition{3}) has3 = true;
        }
        CHECK(total == 3);
        CHECK(has21);
        CHECK(has12);
        CHECK(has3);
    }
}

TEST_CASE("duality: <Delta_*(f), a (x) b> = <f, a *_s b>") {
    for (int wt = 2; wt <= 6; ++wt) {
        for (const Composition& f : compositions_of(wt)) {
            NCPoly fw(ncalg::y_alphabet(), to_y_word(f), 1);
            ncalg::TensorPoly df = stuffle_coproduct(fw);
            for (int p = 1; p < wt; ++p)
                for (const Composition& a : compositions_of(p))
                    for (const Composition& b : compositions_of(wt - p)) {
                        Scalar lhs = df.coeff(to_y_word(a), to_y_word(b));
                        Scalar rhs = 0;
                        for (const auto& [c, m] : stuffle_collapsed(a, b))
                            if (c == f) rhs += m;
                        CHECK(lhs == rhs);
                    }
        }
    }
}

TEST_CASE("Delta_* is coassociative and an algebra map") {
    rng::Gen g(79);
    auto y = ncalg::y_alphabet();
    for (int t = 0; t < 6; ++t) {
        Composition a, b;
        for (int i = 0, k = g.uniform(1, 2); i < k; ++i) a.push_back(g.uniform(1, 2));
        for (int i = 0, k = g.uniform(1, 2); i < k; ++i) b.push_back(g.uniform(1, 2));
        NCPoly fa(y, to_y_word(a), 1), fb(y, to_y_word(b), 1);
        CHECK(stuffle_coproduct(fa * fb) == stuffle_coproduct(fa) * stuffle_coproduct(fb));
    }
    // Coassociativity on words of weight <= 5: apply Delta to each factor.
    for (int wt = 1; wt <= 5; ++wt)
        for (const Composition& f : compositions_of(wt)) {
            NCPoly fw(y, to_y_word(f), 1);
            ncalg::TensorPoly d = stuffle_coproduct(fw);
            // (Delta (x) 1) Delta and (1 (x) Delta) Delta as coefficient maps on
            // triples.
            std::map<std::tuple<Word, Word, Word>, Scalar> left, right;
            for (const auto& [k, c] : d.terms()) {
                ncalg::TensorPoly inner = stuffle_coproduct(NCPoly(y, k.first, c));
                for (const auto& [k2, c2] : inner.terms()) left[{k2.first, k2.second, k.second}] += c2;
                ncalg::TensorPoly inner2 = stuffle_coproduct(NCPoly(y, k.second, c));
                for (const auto& [k2, c2] : inner2.terms()) right[{k.first, k2.first, k2.second}] += c2;
            }
            for (auto it = left.begin(); it != left.end();)
                it = it->second == 0 ? left.erase(it) : std::next(it);
            for (auto it = right.begin(); it != right.end();)
                it = it->second == 0 ? right.erase(it) : std::next(it);
            CHECK(left == right);
        }
}

TEST_CASE("dmr0 membership") {
    CHECK(dmr0_membership(sigma3()).pass);
    auto xy = ncalg::xy_alphabet();
    LieElement bad(xy);
    bad.add_coord({0, 0, 1}, 1); // [x,[x,y]] alone
    CHECK_FALSE(dmr0_membership(bad).pass);
    CHECK(dmr0_membership(LieElement(xy)).pass);
    LieElement low(xy);
    low.add_coord({0, 1}, 1);
    CHECK_THROWS(dmr0_membership(low));
}

TEST_CASE("p-space basics") {
    // p(x1 (x) x1) corresponds to p_{(1),(1)} = x y over (z,x,y).
    CHECK(p_monomial({1}, {1}) == NCPoly(zxy_alphabet(), Word{1, 2}, 1));
    PPoly pp = pi_p(p_monomial({1}, {1}));
    CHECK(pp.coeff({1}, {1}) == 1);
    // Non-P monomials are projected away.
    CHECK(pi_p(NCPoly(zxy_alphabet(), Word{2, 1}, 1)).is_zero()); // y before x
    CHECK(pi_p(NCPoly(zxy_alphabet(), Word{1, 0}, 1)).is_zero()); // trailing z

    // pi of the W_I basis element ad(t23)^{k-1} ad(t24)^{l-1} [t23,t24].
    auto ia = dkho::wi_alphabet();
    LieElement t23 = LieElement::generator(ia, 1), t24 = LieElement::generator(ia, 2);
    LieElement ptilde = freelie::bracket(t23, t24);
    ptilde = freelie::bracket(t23, ptilde); // k = 3 ... build ad(t23)^2 [t23,t24]
    ptilde = freelie::bracket(t23, ptilde);
    NCPoly assoc = freelie::to_ncpoly(ptilde);
    NCPoly zxy(zxy_alphabet());
    for (const auto& [w, c] : assoc.terms()) zxy.add_term(w, c);
    PPoly img = pi_p(zxy);
    CHECK(img.coeff({1, 1, 1, 1}, {1}) == 1);
    CHECK(img.terms().size() == 1);
}

TEST_CASE("lambda on the spec example") {
    PPoly p;
    p.add_term({1}, {1}, 1);
    PPoly full = lambda_map(p, false);
    CHECK(full.coeff({1, 1}, {}) == 1);
    CHECK(full.coeff({1}, {1}) == 1);
    PPoly red = lambda_map(p, true);
    CHECK(red.coeff({1}, {1}) == 1);
    CHECK(red.coeff({1, 1}, {}) == 0);
}

TEST_CASE("ab_I of [x,y]") {
    auto xy = ncalg::xy_alphabet();
    LieElement phi(xy);
    phi.add_coord({0, 1}, 1);
    auto ia = dkho::wi_alphabet();
    LieElement expected =
        -freelie::bracket(LieElement::generator(ia, 1), LieElement::generator(ia, 2));
    CHECK(ab_i(phi) == expected);
}

TEST_CASE("pi restricted to I/[I,I] hits P_{>=1,>=1} bijectively (degreewise)") {
    auto ia = dkho::wi_alphabet();
    for (int d = 2; d <= 6; ++d) {
        auto left = [&](int p) { return dkho::free_ideal(ia, {1}, p); };
        auto right = [&](int p) { return dkho::free_ideal(ia, {2}, p); };
        linalg::Subspace ideal_i = dkho::free_bracket_span(ia, left, right, d);
        linalg::Subspace ii = dkho::free_bracket_span(
            ia, [&](int p) { return dkho::free_bracket_span(ia, left, right, p); },
            [&](int p) { return dkho::free_bracket_span(ia, left, right, p); }, d);
        // Count P_{>=1,>=1} basis elements of total weight d.
        std::size_t pdim = 0;
        for (int p = 1; p < d; ++p)
            pdim += compositions_of(p).size() * compositions_of(d - p).size();
        CHECK(ideal_i.dim() - ii.dim() == pdim);

        // pi kills [I, I] and is injective on a complement: the image of an
        // I-basis spans exactly pdim directions.
        std::map<std::pair<Composition, Composition>, std::size_t> index;
        std::size_t next = 0;
        std::vector<linalg::Vec> rows;
        for (std::size_t r = 0; r < ideal_i.dim(); ++r) {
            LieElement e = freelie::lie_from_vec(ia, d, ideal_i.basis().row(r));
            NCPoly assoc = freelie::to_ncpoly(e);
            NCPoly zxy(zxy_alphabet());
            for (const auto& [w, c] : assoc.terms()) zxy.add_term(w, c);
            PPoly img = pi_p(zxy);
            for (const auto& [k, c] : img.terms())
                if (!index.count(k)) index.emplace(k, next++);
            linalg::Vec v(3 * pdim, Scalar(0)); // generous fixed size
            for (const auto& [k, c] : img.terms()) v[index.at(k)] = c;
            rows.push_back(std::move(v));
        }
        linalg::Matrix m(0, 3 * pdim);
        for (auto& r : rows) m.push_row(std::move(r));
        CHECK(linalg::rank(m) == pdim);

        for (std::size_t r = 0; r < ii.dim(); ++r) {
            LieElement e = freelie::lie_from_vec(ia, d, ii.basis().row(r));
            NCPoly assoc = freelie::to_ncpoly(e);
            NCPoly zxy(zxy_alphabet());
            for (const auto& [w, c] : assoc.terms()) zxy.add_term(w, c);
            CHECK(pi_p(zxy).is_zero());
        }
    }
}

TEST_CASE("shuffle-coproduct diagram commutes") {
    rng::Gen g(83);
    auto xy = ncalg::xy_alphabet();
    SUBCASE("zero") {
        DiagramReport r = dmr_diagram_check(LieElement(xy));
        CHECK(r.pass);
    }
    SUBCASE("sigma_3") {
        CHECK(dmr_diagram_check(sigma3()).pass);
        CHECK(dmr_diagram_check(sigma3(), true).pass);
    }
    SUBCASE("random Lie elements, degrees 2..6") {
        for (int d = 2; d <= 6; ++d)
            for (int t = 0; t < 4; ++t) {
                LieElement psi = g.lie_nonzero(xy, d);
                DiagramReport r = dmr_diagram_check(psi);
                CHECK(r.pass);
                DiagramReport rc = dmr_diagram_check(psi, true);
                CHECK(rc.pass);
            }
    }
}
