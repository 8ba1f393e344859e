#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cdalg {

/// Exact rational scalar. Always held in canonical form: positive denominator,
/// numerator and denominator coprime.
class Rational {
  public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT: integers convert implicitly
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Accepts "p", "-p", "p/q" with arbitrary-length decimal integers.
    static Rational parse(std::string_view text);

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;
    /// Always "p/q" (the serialization form).
    std::string fraction_str() const;

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const;
    bool is_one() const noexcept { return value_ == 1; }

    Rational abs() const;
    /// True when this is the square of a rational number.
    bool is_square() const;
    /// Exact square root; throws unless is_square().
    Rational sqrt() const;

    const mpq_class& raw() const noexcept { return value_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    /// this += a * b, reusing `scratch` for the product.
    void add_product(const Rational& a, const Rational& b, Rational& scratch);
    /// this -= a * b.
    void sub_product(const Rational& a, const Rational& b, Rational& scratch);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace cdalg
