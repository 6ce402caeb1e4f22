#include <doctest.h>

#include "dkpent/lie.hpp"
#include "dkpent/rng.hpp"

using namespace dkpent;
using namespace dkpent::freelie;
using ncalg::NCPoly;
using ncalg::Word;

TEST_CASE("lyndon word generation matches Witt dimensions") {
    CHECK(lyndon_words(2, 1) == std::vector<Word>{{0}, {1}});
    CHECK(lyndon_words(2, 2) == std::vector<Word>{{0, 1}});
    CHECK(lyndon_words(2, 3) == std::vector<Word>{{0, 0, 1}, {0, 1, 1}});
    for (std::size_t a = 1; a <= 4; ++a)
        for (int d = 1; d <= 8; ++d) {
            auto words = lyndon_words(a, d);
            CHECK(static_cast<long long>(words.size()) == witt_dimension(a, d));
            for (const Word& w : words) CHECK(is_lyndon(w));
        }
}

TEST_CASE("normal form recognizes brackets and rejects non-Lie input") {
    auto x = ncalg::x_alphabet();
    NCPoly x0 = NCPoly::letter(x, 0), x1 = NCPoly::letter(x, 1);

    LieNormalForm nf = lie_normal_form(ncalg::commutator(x0, x1));
    CHECK(nf.ok);
    CHECK(nf.element.coord({0, 1}) == 1);

    LieNormalForm bad = lie_normal_form(x0 * x1);
    CHECK_FALSE(bad.ok);
    // Dynkin defect theta(x0 x1) - 2 x0 x1 = [x0,x1] - 2 x0 x1.
    CHECK(bad.defect == ncalg::commutator(x0, x1) - (x0 * x1) * Scalar(2));

    LieNormalForm cubic = lie_normal_form(ncalg::commutator(x0, ncalg::commutator(x0, x1)));
    CHECK(cubic.ok);
    CHECK(cubic.element.coord({0, 0, 1}) == 1);
    CHECK(cubic.element.coords().size() == 1);
}

TEST_CASE("to_ncpoly expands standard bracketings") {
    auto x = ncalg::x_alphabet();
    LieElement e(x);
    e.add_coord({0, 1}, 1);
    NCPoly x0 = NCPoly::letter(x, 0), x1 = NCPoly::letter(x, 1);
    CHECK(to_ncpoly(e) == x0 * x1 - x1 * x0);

    LieElement cubic(x);
    cubic.add_coord({0, 0, 1}, 1);
    CHECK(to_ncpoly(cubic) == x0 * x0 * x1 - (x0 * x1 * x0) * Scalar(2) + x1 * x0 * x0);

    CHECK(to_ncpoly(LieElement(x)).is_zero());
}

TEST_CASE("normal form is a left inverse of to_ncpoly") {
    rng::Gen g(5);
    auto x = ncalg::x_alphabet();
    auto t3 = ncalg::alphabet({"a", "b", "c"});
    for (int d = 1; d <= 8; ++d) {
        LieElement e = g.lie(x, d);
        LieNormalForm nf = lie_normal_form(to_ncpoly(e));
        CHECK(nf.ok);
        CHECK(nf.element == e);
    }
    for (int d = 1; d <= 5; ++d) {
        LieElement e = g.lie(t3, d);
        LieNormalForm nf = lie_normal_form(to_ncpoly(e));
        CHECK(nf.ok);
        CHECK(nf.element == e);
    }
}

TEST_CASE("bracket satisfies antisymmetry and Jacobi") {
    rng::Gen g(17);
    auto x = ncalg::x_alphabet();
    for (int t = 0; t < 8; ++t) {
        int da = g.uniform(1, 2), db = g.uniform(1, 2), dc = g.uniform(1, 2);
        LieElement a = g.lie(x, da), b = g.lie(x, db), c = g.lie(x, dc);
        CHECK(bracket(a, b) == -bracket(b, a));
        LieElement jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("substitution is a Lie homomorphism") {
    rng::Gen g(23);
    auto x = ncalg::x_alphabet();
    auto t = ncalg::alphabet({"u", "v", "w"});
    std::vector<LieElement> images = {g.lie_nonzero(t, 2), g.lie_nonzero(t, 2)};
    for (int t2 = 0; t2 < 6; ++t2) {
        LieElement a = g.lie(x, g.uniform(1, 3));
        LieElement b = g.lie(x, g.uniform(1, 3));
        CHECK(substitute(bracket(a, b), images) == bracket(substitute(a, images), substitute(b, images)));
    }
    SUBCASE("spec examples") {
        LieElement phi(x);
        phi.add_coord({0, 1}, 1); // [x, y]
        auto t12 = LieElement::generator(t, 0);
        auto t23 = LieElement::generator(t, 1);
        CHECK(substitute(phi, {t12, t23}) == bracket(t12, t23));

        LieElement letter(x);
        letter.add_coord({0}, 1);
        LieElement target = -(LieElement::generator(x, 0) + LieElement::generator(x, 1));
        CHECK(substitute(letter, {target, LieElement::generator(x, 1)}) == target);
    }
}

TEST_CASE("lazard elimination splits the last letter off") {
    auto a3 = ncalg::alphabet({"a", "b", "c"});
    auto a2 = ncalg::alphabet({"a", "b"});
    LieElement a = LieElement::generator(a3, 0);
    LieElement c = LieElement::generator(a3, 2);

    SUBCASE("[a, c] is one ad-word") {
        LazardSplit s = lazard_split(bracket(a, c));
        CHECK(s.outer.is_zero());
        CHECK(s.ideal_coords.size() == 1);
        CHECK(s.ideal_coords.at(Word{0}) == 1);
    }
    SUBCASE("pure outer element") {
        LazardSplit s = lazard_split(a);
        CHECK(s.outer == LieElement::generator(a2, 0));
        CHECK(s.ideal_coords.empty());
    }
    SUBCASE("[c,[a,c]] lies in the derived ideal") {
        LazardSplit s = lazard_split(bracket(c, bracket(a, c)));
        CHECK(s.outer.is_zero());
        CHECK(s.ideal_coords.empty());
    }
    SUBCASE("random elements reassemble modulo the derived ideal") {
        rng::Gen g(31);
        for (int d = 2; d <= 6; ++d) {
            LieElement e = g.lie(a3, d);
            LazardSplit s = lazard_split(e);
            // outer + sum of ad-words + derived-ideal part == e
            LieElement rebuilt(a3);
            std::vector<LieElement> embed = {LieElement::generator(a3, 0), LieElement::generator(a3, 1)};
            rebuilt += substitute(s.outer, embed);
            for (const auto& [w, coeff] : s.ideal_coords) rebuilt += ad_word(a3, w) * coeff;
            LieElement diff = e - rebuilt;
            if (!diff.is_zero()) {
                linalg::Subspace derived = lazard_ideal_derived(a3, d);
                CHECK(derived.contains(lie_to_vec(diff, d)));
            }
        }
    }
}
