#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "cdalg/rational.hpp"

namespace cdalg {

/// Index of a canonical basis element e_i of A_level.
struct BasisIndex {
    unsigned level;
    std::size_t index;

    /// Throws out_of_range unless index < 2^level.
    BasisIndex(unsigned level, std::size_t index);
};

/// An element of the Cayley-Dickson algebra A_n, stored as its 2^n exact
/// coordinates in the canonical basis e_0, ..., e_{2^n - 1}.
class Element {
  public:
    /// The zero element of A_level.
    explicit Element(unsigned level);
    /// Throws invalid_argument unless coeffs.size() == 2^level.
    Element(unsigned level, std::vector<Rational> coeffs);

    static Element basis(BasisIndex i);
    static Element basis(unsigned level, std::size_t index) { return basis(BasisIndex(level, index)); }
    static Element scalar(unsigned level, const Rational& r);
    /// The level-(n+1) element with halves (lo, hi).
    static Element join(const Element& lo, const Element& hi);

    unsigned level() const noexcept { return level_; }
    std::size_t dimension() const noexcept { return coeffs_.size(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    const Rational& at(std::size_t i) const;
    void set(std::size_t i, Rational value);

    bool is_zero() const noexcept;
    std::size_t nonzero_count() const noexcept;

    /// Halves (x1, x2) in A_{n-1} x A_{n-1}; level must be >= 1.
    Element lower_half() const;
    Element upper_half() const;

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Rational& r);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(const Rational& r, Element x) { return x *= r; }
    Element operator-() const;

    friend bool operator==(const Element& lhs, const Element& rhs) = default;

  private:
    unsigned level_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Element& x);

std::size_t dimension_of(unsigned level);
void require_same_level(const Element& x, const Element& y, const char* op);

// Vector-space structure.
Element add(const Element& x, const Element& y);
Element scale(const Rational& r, const Element& x);

// Doubling-formula algebra.
//   (x1, x2)(y1, y2) = (x1 y1 - conj(y2) x2, y2 x1 + x2 conj(y1)),  conj(x1, x2) = (conj(x1), -x2)

/// Product through the cached structure-constant table.
Element multiply(const Element& x, const Element& y);
/// Product computed by recursing on halves with the doubling formula.
/// Reference route; the table is validated against it.
Element multiply_recursive(const Element& x, const Element& y);
Element operator*(const Element& x, const Element& y);

Element conjugate(const Element& x);
Rational trace(const Element& x);
/// <x, y> = trace(x conj(y)) / 2, evaluated through the algebra.
Rational inner_product(const Element& x, const Element& y);
/// Coordinate dot product; equal to inner_product() for every pair.
Rational dot(const Element& x, const Element& y);
Rational norm_sq(const Element& x);

/// (x1, x2) -> (-x2, x1); equals x * e_{2^{n-1}}.
Element tilde(const Element& x);
/// e_{2^{n-1}}, the distinguished unit written e~0.
Element tilde_unit(unsigned level);
std::size_t tilde_unit_index(unsigned level);

/// x = real * e0 + tilde_part * e~0 + rest, rest doubly pure.
struct Decomposition {
    Rational real;
    Rational tilde_part;
    Element rest;
};
Decomposition decompose(const Element& x);

bool is_pure(const Element& x);
bool is_doubly_pure(const Element& x);
/// The element with its e0 coordinate cleared.
Element pure_part(const Element& x);

Element associator(const Element& a, const Element& b, const Element& c);
Element commutator(const Element& a, const Element& b);

/// True when x and y span a space of dimension <= 1 (zero vectors count as dependent).
bool linearly_dependent(const Element& x, const Element& y);

} // namespace cdalg
