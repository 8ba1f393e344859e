#include "doctest.h"

#include "cdalg/classification.hpp"
#include "cdalg/error.hpp"
#include "cdalg/structure_maps.hpp"
#include "support.hpp"

using namespace cdalg;
using test::el;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal;
}

// mu read literally: (x, y) -> (x, 0) + (y, 0) alpha with alpha = -1/2 e0 - 1/2 ~e0
Element mu_literal(const Element& v) {
    const unsigned n = v.level();
    const Element x = Element::join(v.lower_half(), Element(n - 1));
    const Element y = Element::join(v.upper_half(), Element(n - 1));
    const Element alpha = Rational(-1, 2) * (Element::scalar(n, 1) + tilde_unit(n));
    return x + y * alpha;
}

} // namespace

TEST_CASE("H_a is a quaternion algebra") {
    const SubalgebraBasis h = h_a_basis(el(4, "e1"));
    CHECK(h.closed);
    CHECK(h.labels == std::vector<std::string>{"e0", "~a", "a", "~e0"});
    CHECK(table_matches(h, h_a_sign_table()));
    CHECK(identify_with_level(h, 2).permutation.has_value());
    // (~a)(a) = +~e0 under this product
    CHECK(tilde(el(4, "e1")) * el(4, "e1") == el(4, "e8"));

    const Element a = el(5, "3/5e3 + 4/5e17");
    CHECK(table_matches(h_a_basis(a), h_a_sign_table()));
    CHECK(table_matches(h_a_basis(el(4, "2e3"), true), h_a_sign_table()));
    CHECK(code_of([] { h_a_basis(el(4, "2e3")); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { h_a_basis(el(4, "e1 + e2"), true); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { h_a_basis(el(4, "e8")); }) == ErrorCode::invalid_argument);
}

TEST_CASE("the table with the (~a, a) signs swapped is not associative") {
    SignTable printed = h_a_sign_table();
    printed[1][2] = {-1, 3};
    printed[2][1] = {1, 3};
    // i j = -k, j i = k, i k = -j: (i i) j = -j but i (i j) = -i k = j
    const auto prod = [&](SignedBasis x, SignedBasis y) {
        const SignedBasis p = printed[x.index][y.index];
        return SignedBasis{x.sign * y.sign * p.sign, p.index};
    };
    const SignedBasis i{1, 1}, j{1, 2};
    const SignedBasis left = prod(prod(i, i), j), right = prod(i, prod(i, j));
    CHECK(left.index == right.index);
    CHECK(left.sign == -right.sign);
    CHECK_FALSE(table_matches(h_a_basis(el(4, "e1")), printed));
}

TEST_CASE("projection onto a span") {
    const std::vector<Element> basis{el(4, "1"), el(4, "e9"), el(4, "e1"), el(4, "e8")};
    const Split s = projection_split(el(4, "2 + e1 + e3 - e9"), basis);
    CHECK(s.inside == el(4, "2 + e1 - e9"));
    CHECK(s.outside == el(4, "e3"));
    const Split w = projection_split(el(4, "e1 + e2"), std::vector<Element>{el(4, "e1 + e2"), el(4, "e1 - e2")});
    CHECK(w.outside.is_zero());
    CHECK_THROWS_AS(projection_split(el(4, "e1"), std::vector<Element>{el(4, "e1"), el(4, "e1 + e2")}), Error);
}

TEST_CASE("quaternion and octonion spans") {
    const Element a = el(4, "e1"), b = el(4, "e2");
    const SubalgebraBasis q = quaternion_span(a, b);
    CHECK(q.closed);
    CHECK(identify_with_level(q, 2).fixed_order);
    const SubalgebraBasis o = octonion_span(a, b);
    CHECK(o.closed);
    const Identification id = identify_with_level(o, 3);
    CHECK(id.fixed_order);
    CHECK(id.permutation.has_value());
    CHECK(table_matches(o, level_sign_table(3)));

    const auto hyp = [](const char* x, const char* y) {
        try {
            quaternion_span(el(4, x), el(4, y));
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::hypothesis);
            return std::string(e.what());
        }
        return std::string("accepted");
    };
    CHECK(hyp("e1", "e9") == "hypothesis violated: b lies in the orthogonal complement of H_a");
    CHECK(hyp("e1", "e8") == "hypothesis violated: b is doubly pure");
    CHECK(hyp("e1", "2e2") == "hypothesis violated: norm_sq(b) = 1");
    CHECK(span_hypothesis_failure(el(4, "e1"), el(4, "3/5e4 + 4/5e15")) == "a alternates strongly with b");
    CHECK_FALSE(span_hypothesis_failure(el(4, "e1"), el(4, "e2")).has_value());
}

TEST_CASE("companion element") {
    const Element samples[] = {el(4, "3/5e1 + 4/5e8"), el(4, "e8"), el(4, "-e8"), el(4, "e3"),
                               el(5, "3/13e1 + 4/13e2 + 12/13e16"), el(4, "-4/5e15 + 3/5e8")};
    for (const auto& a : samples) {
        CAPTURE(format_element(a));
        const Element b = companion(a);
        CHECK(norm_sq(b) == norm_sq(a));
        CHECK(dot(a, b).is_zero());
        CHECK(strongly_alternates_with(a, b));
    }
    CHECK(companion(el(4, "e8")) == el(4, "-e1"));
    CHECK_THROWS_AS(companion(el(4, "e1 + e2")), Error);
    CHECK_THROWS_AS(companion(el(3, "e1")), Error);
    // |c| irrational
    CHECK_THROWS_AS(companion(el(4, "1/3e1 + 2/3e2 + 2/3e8")), Error);
}

TEST_CASE("tau and mu are automorphisms of A4") {
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) {
            const Element x = Element::basis(4, i), y = Element::basis(4, j);
            CHECK(tau(x * y) == tau(x) * tau(y));
            CHECK(mu(x * y) == multiply(mu(x), mu(y)));
        }
    test::Gen g(52);
    for (int k = 0; k < 10; ++k) {
        const Element x = g.dense(4);
        CHECK(tau(tau(x)) == x);
        CHECK(mu(mu(mu(x))) == QuadraticElement(x));
        CHECK(mu(tau(x)) == tau(mu(mu(x))));
    }
    CHECK(tau(el(4, "e8")) == el(4, "-e8"));
    CHECK(mu(el(4, "e8")) == QuadraticElement(el(4, "e8")));
    CHECK(format_quadratic(mu(el(4, "e1"))) == "(-1/2*e1) + sqrt(3)*(-1/2*e9)");
    CHECK_THROWS_AS(tau(el(3, "e1")), Error);
}

TEST_CASE("the literal reading of mu is not an automorphism") {
    const Element te = el(4, "e8");
    const Element image = mu_literal(te);
    CHECK(image == el(4, "-1/2 - 1/2e8"));
    CHECK(norm_sq(image) == Rational(1, 2));
    // an automorphism would preserve e8 e8 = -1
    CHECK(mu_literal(te * te) != image * image);
    CHECK(mu_literal(mu_literal(mu_literal(te))) != te);
}
