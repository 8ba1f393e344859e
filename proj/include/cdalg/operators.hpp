#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cdalg/element.hpp"

namespace cdalg {

/// Dense 2^n x 2^n rational matrix of a linear operator on A_n; column j is
/// the image of e_j.
class Matrix {
  public:
    explicit Matrix(unsigned level);
    static Matrix identity(unsigned level);
    /// Builds the matrix whose column j is columns[j].
    static Matrix from_columns(const std::vector<Element>& columns);

    unsigned level() const noexcept { return level_; }
    std::size_t dimension() const noexcept { return dim_; }

    const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    bool is_zero() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Rational& r);
    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(const Rational& r, Matrix m) { return m *= r; }
    Matrix operator-() const;
    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    unsigned level_;
    std::size_t dim_;
    std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Element apply(const Matrix& m, const Element& x);

/// Row-major CSV, one matrix row per line, entries as "p/q".
std::string to_csv(const Matrix& m);

/// L_a: x -> a x.
Matrix left_mult_matrix(const Element& a);
/// R_b: x -> x b.
Matrix right_mult_matrix(const Element& b);

/// L_a^2 + R_b^2 for pure a, b.
Matrix op_A(const Element& a, const Element& b);
/// S = R_b L_a - L_a R_b, so that S x = (a, x, b). Pure a, b.
Matrix op_S(const Element& a, const Element& b);

/// Same maps applied to one vector without forming matrices.
Element apply_A(const Element& a, const Element& b, const Element& x);
Element apply_S(const Element& a, const Element& b, const Element& x);

/// For pure a, b in A_n and x, y in A_n: compares L_{(a,b)}^2 (x, y), computed
/// with level-(n+1) products, against (A x - S y, A y + S x).
bool check_doubled_square(const Element& a, const Element& b, const Element& x, const Element& y);

bool is_skew_symmetric(const Matrix& m);
/// Some(t) when m == t I.
std::optional<Rational> scalar_value(const Matrix& m);

} // namespace cdalg
