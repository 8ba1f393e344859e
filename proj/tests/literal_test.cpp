#include "doctest.h"

#include "cdalg/error.hpp"
#include "cdalg/expression.hpp"
#include "support.hpp"

using namespace cdalg;
using test::el;

TEST_CASE("literal grammar") {
    const Element x = el(4, "e1 + 2*e10 - 1/2*e15");
    CHECK(x[1] == Rational(1));
    CHECK(x[10] == Rational(2));
    CHECK(x[15] == Rational(-1, 2));
    CHECK(x.nonzero_count() == 3);
    CHECK(el(4, "  -e3+e3 ") == Element(4));
    CHECK(el(4, "3") == Element::scalar(4, 3));
    CHECK(el(4, "2 e0 + e0") == Element::scalar(4, 3));
    CHECK(el(4, "-2/4*e7") == Rational(-1, 2) * Element::basis(4, 7));
    CHECK(el(2, "0") == Element(2));
}

TEST_CASE("literal errors") {
    for (const char* bad : {"", "e", "e16", "1/0 e1", "e1 +", "e1 e2", "2**e1", "x1", "e1 * e2", "(e1)"}) {
        CAPTURE(bad);
        try {
            (void)el(4, bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK((e.code() == ErrorCode::parse || e.code() == ErrorCode::out_of_range));
        }
    }
}

TEST_CASE("canonical formatting") {
    CHECK(format_element(Element(3)) == "0");
    CHECK(format_element(el(4, "e15 + e5 - e14 - e15")) == "e5 - e14");
    CHECK(format_element(el(4, "-e14 + e5")) == "e5 - e14");
    CHECK(format_element(el(4, "-1/2 + 3e2")) == "-1/2 + 3*e2");
    CHECK(format_element(el(4, "-e1")) == "-e1");
    CHECK(format_element(el(4, "-2/3*e9")) == "-2/3*e9");
}

TEST_CASE("format then parse is the identity (property)") {
    test::Gen g(21);
    for (unsigned n = 0; n <= 6; ++n)
        for (int k = 0; k < 25; ++k) {
            const Element x = k % 2 ? g.dense(n) : g.sparse(n, 3);
            const std::string s = format_element(x);
            CAPTURE(s);
            CHECK(el(n, s) == x);
            CHECK(format_element(el(n, s)) == s);
        }
}

TEST_CASE("expression evaluation") {
    CHECK(format_element(evaluate(4, "(e1+e10)*e15")) == "e5 - e14");
    CHECK(evaluate(4, "assoc(e4+e15, e4+e15, e1)") == el(4, "2e10"));
    CHECK(evaluate(4, "conj(1 + e3)") == el(4, "1 - e3"));
    CHECK(evaluate(4, "tilde(e1)") == el(4, "e9"));
    CHECK(evaluate(4, "comm(e1, e10)") == el(4, "2e1") * el(4, "e10"));
    CHECK(evaluate(4, "-e1*e2") == -(el(4, "e1") * el(4, "e2")));
    CHECK(evaluate(4, "2e10") == el(4, "2e10"));
    CHECK(evaluate(4, "1/2 * (e1 - e1)") == Element(4));
    // left-associative chains
    const Element a = el(4, "e1"), b = el(4, "e2"), c = el(4, "e4");
    CHECK(evaluate(4, "e1*e2*e4") == (a * b) * c);
    CHECK(evaluate(4, "e1*(e2*e4)") == a * (b * c));
    CHECK((a * b) * c != a * (b * c));
    for (const char* bad : {"(e1", "e1)", "conj(e1, e2)", "foo(e1)", "assoc(e1,e2)", "e1 ** e2", "e20"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(evaluate(4, bad), Error);
    }
}
