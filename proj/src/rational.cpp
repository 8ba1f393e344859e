#include "cdalg/rational.hpp"

#include <cctype>
#include <ostream>

#include "cdalg/error.hpp"

namespace cdalg {

namespace {

bool is_integer_literal(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view text) {
    if (!is_integer_literal(text)) fail(ErrorCode::parse, "malformed integer '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    return mpz_class(std::string(text), 10);
}

} // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) fail(ErrorCode::invalid_argument, "rational with zero denominator");
    value_ = mpq_class(numerator, 1);
    value_ /= denominator;
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const { return value_.get_str(10); }

std::string Rational::fraction_str() const {
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

bool Rational::is_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 && mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt() const {
    if (!is_square()) fail(ErrorCode::invalid_argument, str() + " is not the square of a rational");
    mpz_class num = ::sqrt(value_.get_num());
    mpz_class den = ::sqrt(value_.get_den());
    return Rational(mpq_class(num, den));
}

Rational Rational::operator-() const {
    Rational out;
    mpq_neg(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) fail(ErrorCode::invalid_argument, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b, Rational& scratch) {
    mpq_mul(scratch.value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.value_.get_mpq_t());
}

void Rational::sub_product(const Rational& a, const Rational& b, Rational& scratch) {
    mpq_mul(scratch.value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.value_.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace cdalg
