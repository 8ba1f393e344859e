#include "doctest.h"

#include "cdalg/classification.hpp"
#include "cdalg/error.hpp"
#include "support.hpp"

using namespace cdalg;
using test::el;

TEST_CASE("alternativity") {
    CHECK(is_alternative(el(4, "e1")).alternative);
    const auto c = is_alternative(el(4, "e1 + e10"));
    CHECK_FALSE(c.alternative);
    REQUIRE(c.witness);
    // first basis witness in index order; e15 (the worked example's x) is another
    CHECK(*c.witness == el(4, "e4"));
    CHECK_FALSE(associator(el(4, "e1 + e10"), el(4, "e1 + e10"), el(4, "e15")).is_zero());
    test::Gen g(41);
    for (int k = 0; k < 10; ++k) CHECK(is_alternative(g.dense(3)).alternative);
}

TEST_CASE("strong alternativity") {
    const AltStatus e1 = is_strongly_alternative(el(4, "e1"));
    CHECK(e1.alternative);
    CHECK_FALSE(e1.strongly_alternative);
    REQUIRE(e1.witness);
    CHECK(e1.witness_kind == WitnessKind::middle_square);
    CHECK_FALSE(associator(el(4, "e1"), *e1.witness, *e1.witness).is_zero());
    // the worked example's x
    CHECK(associator(el(4, "e4+e15"), el(4, "e4+e15"), el(4, "e1")) == el(4, "2e10"));
    CHECK_FALSE(strongly_alternates_with(el(4, "e1"), el(4, "e4+e15")));
    CHECK(is_strongly_alternative(el(4, "e8")).strongly_alternative);
    CHECK(is_strongly_alternative(el(4, "-3/2 + 5/7e8")).strongly_alternative);
    const AltStatus bad = is_strongly_alternative(el(4, "e1 + e10"));
    CHECK(bad.witness_kind == WitnessKind::left_alternative);
    CHECK_FALSE(associator(el(4, "e1 + e10"), el(4, "e1 + e10"), *bad.witness).is_zero());
}

TEST_CASE("basis scans agree with dense probes (property)") {
    test::Gen g(42);
    for (int k = 0; k < 30; ++k) {
        const Element a = k % 3 == 0 ? g.sparse(4, 1) : (k % 3 == 1 ? g.sparse(4, 2, true) : g.dense(4));
        const AltStatus s = is_strongly_alternative(a);
        bool left = true, middle = true;
        for (int t = 0; t < 10; ++t) {
            const Element x = g.dense(4);
            left = left && associator(a, a, x).is_zero();
            middle = middle && associator(a, x, x).is_zero();
        }
        CAPTURE(format_element(a));
        CHECK(left == s.alternative);
        if (s.alternative) CHECK(middle == s.strongly_alternative);
        CHECK(s.witness.has_value() == !s.strongly_alternative);
    }
}

TEST_CASE("pairwise relations") {
    const Element a = el(4, "e1 + e10"), b = el(4, "e15");
    CHECK_FALSE(alternates_with(a, b));
    CHECK(normed_with(a, b));
    CHECK(norm_sq(a * b) == Rational(2));
    CHECK(normed_with(el(4, "1"), el(4, "e3 - 2e9")));
    const Element ab[] = {a, b, a * b};
    CHECK_FALSE(is_normed_set(ab));
    const Element one[] = {el(4, "1")};
    CHECK(is_normed_set(one));
    CHECK(is_normed_set(std::span<const Element>{}));
    CHECK_THROWS_AS(alternates_with(a, el(3, "e1")), Error);
}

TEST_CASE("lifting alternative elements") {
    const Element lifted = lift_alternative(el(3, "e1"), 1, 1);
    CHECK(lifted == el(4, "e1 + e9"));
    // independent check through the oracle: (a, a, e_i) = 0 for every i
    const oracle::Vec v = test::to_vec(lifted);
    for (std::size_t i = 0; i < 16; ++i) CHECK(oracle::is_zero(oracle::assoc(v, v, oracle::unit(16, i))));
    CHECK(lift_alternative(el(3, "e1"), 1, 0) == el(4, "e1"));
    CHECK(is_alternative(lift_alternative(el(3, "e1"), 1, 0)).alternative);
    CHECK_FALSE(is_alternative(Element::join(el(3, "e1"), el(3, "e2"))).alternative);
    CHECK_THROWS_AS(lift_alternative(el(3, "1 + e1"), 1, 1), Error);
    CHECK_THROWS_AS(lift_alternative(el(4, "e1 + e10"), 1, 1), Error);
}

TEST_CASE("yui witnesses") {
    CHECK_FALSE(yui_witness(el(4, "e1"), el(4, "3e1 + 5")).has_value());
    const auto w = yui_witness(el(4, "e1"), el(4, "e2"));
    REQUIRE(w);
    CHECK_FALSE(associator(el(4, "e1"), *w, el(4, "e2")).is_zero());
    // oracle: some basis x gives a nonzero associator
    bool any = false;
    const oracle::Vec a = test::to_vec(el(4, "e1 + e10")), b = test::to_vec(el(4, "e2 - e7"));
    for (std::size_t i = 0; i < 16; ++i) any = any || !oracle::is_zero(oracle::assoc(a, oracle::unit(16, i), b));
    CHECK(any);
    CHECK(yui_witness(el(4, "e1 + e10"), el(4, "e2 - e7")).has_value());
    CHECK_THROWS_AS(yui_witness(el(3, "e1"), el(3, "e2")), Error);
}
