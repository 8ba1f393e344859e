#include "cdalg/element.hpp"

#include <ostream>
#include <string>

#include "cdalg/error.hpp"
#include "cdalg/literal.hpp"
#include "cdalg/structure_table.hpp"

namespace cdalg {

std::size_t dimension_of(unsigned level) {
    if (level >= 8 * sizeof(std::size_t) - 2) fail(ErrorCode::out_of_range, "level too large");
    return std::size_t{1} << level;
}

void require_same_level(const Element& x, const Element& y, const char* op) {
    if (x.level() != y.level()) {
        fail(ErrorCode::level_mismatch, std::string(op) + ": level " + std::to_string(x.level()) + " vs level " +
                                            std::to_string(y.level()));
    }
}

BasisIndex::BasisIndex(unsigned level_, std::size_t index_) : level(level_), index(index_) {
    if (index >= dimension_of(level)) {
        fail(ErrorCode::out_of_range,
             "basis index " + std::to_string(index) + " out of range for level " + std::to_string(level));
    }
}

Element::Element(unsigned level) : level_(level), coeffs_(dimension_of(level)) {}

Element::Element(unsigned level, std::vector<Rational> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != dimension_of(level)) {
        fail(ErrorCode::invalid_argument, "level " + std::to_string(level) + " needs " +
                                              std::to_string(dimension_of(level)) + " coefficients, got " +
                                              std::to_string(coeffs_.size()));
    }
}

Element Element::basis(BasisIndex i) {
    Element e(i.level);
    e.coeffs_[i.index] = 1;
    return e;
}

Element Element::scalar(unsigned level, const Rational& r) {
    Element e(level);
    e.coeffs_[0] = r;
    return e;
}

Element Element::join(const Element& lo, const Element& hi) {
    require_same_level(lo, hi, "join");
    std::vector<Rational> c;
    c.reserve(2 * lo.dimension());
    c.insert(c.end(), lo.coeffs_.begin(), lo.coeffs_.end());
    c.insert(c.end(), hi.coeffs_.begin(), hi.coeffs_.end());
    return Element(lo.level_ + 1, std::move(c));
}

const Rational& Element::at(std::size_t i) const {
    if (i >= coeffs_.size()) fail(ErrorCode::out_of_range, "coefficient index " + std::to_string(i));
    return coeffs_[i];
}

void Element::set(std::size_t i, Rational value) {
    if (i >= coeffs_.size()) fail(ErrorCode::out_of_range, "coefficient index " + std::to_string(i));
    coeffs_[i] = std::move(value);
}

bool Element::is_zero() const noexcept {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

std::size_t Element::nonzero_count() const noexcept {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += c.is_zero() ? 0 : 1;
    return n;
}

Element Element::lower_half() const {
    if (level_ == 0) fail(ErrorCode::invalid_argument, "level-0 element has no halves");
    const std::size_t h = coeffs_.size() / 2;
    return Element(level_ - 1, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + h));
}

Element Element::upper_half() const {
    if (level_ == 0) fail(ErrorCode::invalid_argument, "level-0 element has no halves");
    const std::size_t h = coeffs_.size() / 2;
    return Element(level_ - 1, std::vector<Rational>(coeffs_.begin() + h, coeffs_.end()));
}

Element& Element::operator+=(const Element& rhs) {
    require_same_level(*this, rhs, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!rhs.coeffs_[i].is_zero()) coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    require_same_level(*this, rhs, "subtract");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!rhs.coeffs_[i].is_zero()) coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

Element& Element::operator*=(const Rational& r) {
    for (auto& c : coeffs_) {
        if (!c.is_zero()) c *= r;
    }
    return *this;
}

Element Element::operator-() const {
    Element out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << format_element(x); }

Element add(const Element& x, const Element& y) { return x + y; }

Element scale(const Rational& r, const Element& x) { return r * x; }

Element multiply(const Element& x, const Element& y) {
    require_same_level(x, y, "multiply");
    const unsigned level = x.level();
    const std::size_t dim = x.dimension();
    Element out(level);
    std::vector<std::size_t> y_support;
    y_support.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        if (!y[j].is_zero()) y_support.push_back(j);
    }
    if (y_support.empty()) return out;

    std::vector<Rational> acc(dim);
    Rational scratch;
    const StructureTable* table =
        level <= StructureTable::kMaxCachedLevel ? &StructureTable::for_level(level) : nullptr;
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (const std::size_t j : y_support) {
            const SignedBasis p = table ? table->product(i, j) : basis_product(level, i, j);
            if (p.sign > 0) {
                acc[p.index].add_product(x[i], y[j], scratch);
            } else {
                acc[p.index].sub_product(x[i], y[j], scratch);
            }
        }
    }
    return Element(level, std::move(acc));
}

Element multiply_recursive(const Element& x, const Element& y) {
    require_same_level(x, y, "multiply");
    if (x.level() == 0) return Element(0, {x[0] * y[0]});
    if (x.is_zero() || y.is_zero()) return Element(x.level());
    const Element x1 = x.lower_half(), x2 = x.upper_half();
    const Element y1 = y.lower_half(), y2 = y.upper_half();
    Element lo = multiply_recursive(x1, y1) - multiply_recursive(conjugate(y2), x2);
    Element hi = multiply_recursive(y2, x1) + multiply_recursive(x2, conjugate(y1));
    return Element::join(lo, hi);
}

Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

Element conjugate(const Element& x) {
    Element out = -x;
    out.set(0, x[0]);
    return out;
}

Rational trace(const Element& x) { return x[0] * Rational(2); }

Rational inner_product(const Element& x, const Element& y) {
    require_same_level(x, y, "inner_product");
    return trace(multiply(x, conjugate(y))) / Rational(2);
}

Rational dot(const Element& x, const Element& y) {
    require_same_level(x, y, "dot");
    Rational acc, scratch;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        if (!x[i].is_zero() && !y[i].is_zero()) acc.add_product(x[i], y[i], scratch);
    }
    return acc;
}

Rational norm_sq(const Element& x) { return dot(x, x); }

std::size_t tilde_unit_index(unsigned level) {
    if (level == 0) fail(ErrorCode::invalid_argument, "e~0 needs level >= 1");
    return dimension_of(level) / 2;
}

Element tilde_unit(unsigned level) { return Element::basis(level, tilde_unit_index(level)); }

Element tilde(const Element& x) {
    if (x.level() == 0) fail(ErrorCode::invalid_argument, "tilde needs level >= 1");
    const std::size_t h = x.dimension() / 2;
    std::vector<Rational> c(x.dimension());
    for (std::size_t i = 0; i < h; ++i) {
        c[i] = -x[h + i];
        c[h + i] = x[i];
    }
    return Element(x.level(), std::move(c));
}

Decomposition decompose(const Element& x) {
    Decomposition d{x[0], Rational(), x};
    d.rest.set(0, Rational());
    if (x.level() > 0) {
        const std::size_t t = tilde_unit_index(x.level());
        d.tilde_part = x[t];
        d.rest.set(t, Rational());
    }
    return d;
}

bool is_pure(const Element& x) { return x[0].is_zero(); }

bool is_doubly_pure(const Element& x) {
    if (x.level() == 0) fail(ErrorCode::invalid_argument, "doubly pure needs level >= 1");
    return x[0].is_zero() && x[tilde_unit_index(x.level())].is_zero();
}

Element pure_part(const Element& x) {
    Element out = x;
    out.set(0, Rational());
    return out;
}

Element associator(const Element& a, const Element& b, const Element& c) {
    require_same_level(a, b, "associator");
    require_same_level(b, c, "associator");
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c));
}

Element commutator(const Element& a, const Element& b) { return multiply(a, b) - multiply(b, a); }

bool linearly_dependent(const Element& x, const Element& y) {
    require_same_level(x, y, "linearly_dependent");
    std::size_t pivot = x.dimension();
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        if (!x[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    if (pivot == x.dimension()) return true;
    // y must equal (y_p / x_p) x; compare by 2x2 minors against the pivot column.
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        if (x[pivot] * y[i] != x[i] * y[pivot]) return false;
    }
    return true;
}

} // namespace cdalg
