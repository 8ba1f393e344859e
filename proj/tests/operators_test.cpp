#include "doctest.h"

#include "cdalg/classification.hpp"
#include "cdalg/error.hpp"
#include "cdalg/operators.hpp"
#include "support.hpp"

using namespace cdalg;
using test::el;

TEST_CASE("multiplication matrices act like multiplication") {
    test::Gen g(31);
    for (unsigned n = 1; n <= 4; ++n) {
        const Element a = g.dense(n), x = g.dense(n);
        CHECK(apply(left_mult_matrix(a), x) == a * x);
        CHECK(apply(right_mult_matrix(a), x) == x * a);
        CHECK(left_mult_matrix(a) * right_mult_matrix(a) == right_mult_matrix(a) * left_mult_matrix(a));
    }
}

TEST_CASE("multiplication by a pure element is skew-symmetric") {
    test::Gen g(32);
    for (unsigned n = 1; n <= 4; ++n) {
        const Element a = g.dense(n, true);
        CHECK(is_skew_symmetric(left_mult_matrix(a)));
        CHECK(is_skew_symmetric(right_mult_matrix(a)));
        CHECK_FALSE(is_skew_symmetric(left_mult_matrix(a + el(n, "1"))));
    }
}

TEST_CASE("the S and A operators") {
    test::Gen g(33);
    const Element a = g.dense(4, true), b = g.dense(4, true), x = g.dense(4);
    CHECK(apply(op_S(a, b), x) == associator(a, x, b));
    CHECK(apply_S(a, b, x) == associator(a, x, b));
    CHECK(apply(op_A(a, b), x) == a * (a * x) + (x * b) * b);
    CHECK(apply_A(a, b, x) == apply(op_A(a, b), x));
    CHECK_THROWS_AS(op_S(el(4, "1 + e1"), b), Error);
    CHECK_THROWS_AS(op_A(a, el(4, "e1 + 2")), Error);
}

TEST_CASE("square of left multiplication for pure elements") {
    // L_a^2 = -|a|^2 I exactly when a is alternative
    for (std::size_t i = 1; i < 16; ++i) {
        const Element a = Element::basis(4, i);
        const auto t = scalar_value(left_mult_matrix(a) * left_mult_matrix(a));
        REQUIRE(t.has_value());
        CHECK(*t == Rational(-1));
    }
    const Element a = el(4, "e1 + e10");
    CHECK_FALSE(is_alternative(a).alternative);
    CHECK_FALSE(scalar_value(left_mult_matrix(a) * left_mult_matrix(a)).has_value());
    CHECK(*scalar_value(Matrix::identity(2)) == Rational(1));
    CHECK(*scalar_value(Matrix(2)) == Rational(0));
}

TEST_CASE("doubled left multiplication splits into A and S (property)") {
    test::Gen g(34);
    for (unsigned n = 1; n <= 4; ++n)
        for (int k = 0; k < 10; ++k)
            CHECK(check_doubled_square(g.dense(n, true), g.dense(n, true), g.dense(n), g.dense(n)));
}

TEST_CASE("CSV rendering") {
    const std::string csv = to_csv(left_mult_matrix(el(1, "1/2 + e1")));
    CHECK(csv == "1/2,-1/1\n1/1,1/2\n");
    Matrix m = Matrix::identity(1);
    m(0, 1) = Rational(3);
    CHECK(m.transpose()(1, 0) == Rational(3));
    CHECK((m - m).is_zero());
    CHECK_THROWS_AS(Matrix::from_columns({el(1, "1")}), Error);
}
