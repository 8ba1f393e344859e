#include "cdalg/operators.hpp"

#include "cdalg/error.hpp"

namespace cdalg {

namespace {

void require_pure(const Element& x, const char* op) {
    if (!is_pure(x)) fail(ErrorCode::invalid_argument, std::string(op) + " requires pure arguments");
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.level() != b.level()) fail(ErrorCode::level_mismatch, "matrix levels differ");
}

} // namespace

Matrix::Matrix(unsigned level) : level_(level), dim_(dimension_of(level)), entries_(dim_ * dim_) {}

Matrix Matrix::identity(unsigned level) {
    Matrix m(level);
    for (std::size_t i = 0; i < m.dim_; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Element>& columns) {
    if (columns.empty()) fail(ErrorCode::invalid_argument, "no columns");
    Matrix m(columns.front().level());
    if (columns.size() != m.dim_) fail(ErrorCode::invalid_argument, "column count must equal the dimension");
    for (std::size_t j = 0; j < m.dim_; ++j) {
        require_same_level(columns[j], columns.front(), "from_columns");
        for (std::size_t i = 0; i < m.dim_; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(level_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& r) {
    for (auto& e : entries_) e *= r;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out(*this);
    for (auto& e : out.entries_) e = -e;
    return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    require_same_shape(lhs, rhs);
    const std::size_t n = lhs.dimension();
    Matrix out(lhs.level());
    Rational scratch;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!rhs(k, j).is_zero()) out(i, j).add_product(a, rhs(k, j), scratch);
            }
        }
    }
    return out;
}

Element apply(const Matrix& m, const Element& x) {
    if (m.level() != x.level()) fail(ErrorCode::level_mismatch, "apply: matrix and vector levels differ");
    std::vector<Rational> out(m.dimension());
    Rational scratch;
    for (std::size_t j = 0; j < m.dimension(); ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < m.dimension(); ++i) {
            if (!m(i, j).is_zero()) out[i].add_product(m(i, j), x[j], scratch);
        }
    }
    return Element(m.level(), std::move(out));
}

std::string to_csv(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        for (std::size_t j = 0; j < m.dimension(); ++j) {
            if (j) out += ',';
            out += m(i, j).fraction_str();
        }
        out += '\n';
    }
    return out;
}

Matrix left_mult_matrix(const Element& a) {
    std::vector<Element> cols;
    cols.reserve(a.dimension());
    for (std::size_t j = 0; j < a.dimension(); ++j) cols.push_back(multiply(a, Element::basis(a.level(), j)));
    return Matrix::from_columns(cols);
}

Matrix right_mult_matrix(const Element& b) {
    std::vector<Element> cols;
    cols.reserve(b.dimension());
    for (std::size_t j = 0; j < b.dimension(); ++j) cols.push_back(multiply(Element::basis(b.level(), j), b));
    return Matrix::from_columns(cols);
}

Matrix op_A(const Element& a, const Element& b) {
    require_same_level(a, b, "op_A");
    require_pure(a, "op_A");
    require_pure(b, "op_A");
    const Matrix la = left_mult_matrix(a);
    const Matrix rb = right_mult_matrix(b);
    return la * la + rb * rb;
}

Matrix op_S(const Element& a, const Element& b) {
    require_same_level(a, b, "op_S");
    require_pure(a, "op_S");
    require_pure(b, "op_S");
    const Matrix la = left_mult_matrix(a);
    const Matrix rb = right_mult_matrix(b);
    return rb * la - la * rb;
}

Element apply_A(const Element& a, const Element& b, const Element& x) {
    return multiply(a, multiply(a, x)) + multiply(multiply(x, b), b);
}

Element apply_S(const Element& a, const Element& b, const Element& x) { return associator(a, x, b); }

bool check_doubled_square(const Element& a, const Element& b, const Element& x, const Element& y) {
    require_same_level(a, b, "doubled square");
    require_same_level(a, x, "doubled square");
    require_same_level(a, y, "doubled square");
    require_pure(a, "doubled square");
    require_pure(b, "doubled square");
    const Element ab = Element::join(a, b);
    const Element xy = Element::join(x, y);
    const Element lhs = multiply(ab, multiply(ab, xy));
    const Element rhs =
        Element::join(apply_A(a, b, x) - apply_S(a, b, y), apply_A(a, b, y) + apply_S(a, b, x));
    return lhs == rhs;
}

bool is_skew_symmetric(const Matrix& m) { return m.transpose() == -m; }

std::optional<Rational> scalar_value(const Matrix& m) {
    const Rational t = m(0, 0);
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        for (std::size_t j = 0; j < m.dimension(); ++j) {
            if (m(i, j) != (i == j ? t : Rational())) return std::nullopt;
        }
    }
    return t;
}

} // namespace cdalg
