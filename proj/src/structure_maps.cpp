#include "cdalg/structure_maps.hpp"

#include <algorithm>
#include <numeric>

#include "cdalg/classification.hpp"
#include "cdalg/error.hpp"
#include "cdalg/literal.hpp"

namespace cdalg {

namespace {

/// Solves G c = rhs exactly; nothing when G is singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> g, std::vector<Rational> rhs) {
    const std::size_t k = rhs.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && g[pivot][col].is_zero()) ++pivot;
        if (pivot == k) return std::nullopt;
        std::swap(g[pivot], g[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < k; ++row) {
            if (row == col || g[row][col].is_zero()) continue;
            const Rational f = g[row][col] / g[col][col];
            for (std::size_t c = col; c < k; ++c) g[row][c] -= f * g[col][c];
            rhs[row] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < k; ++i) rhs[i] /= g[i][i];
    return rhs;
}

class SpanSolver {
  public:
    explicit SpanSolver(const std::vector<Element>& elements) : elements_(elements) {
        const std::size_t k = elements.size();
        gram_.assign(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) gram_[i][j] = dot(elements[i], elements[j]);
        }
        std::vector<Rational> probe(k);
        if (k > 0 && !solve(gram_, probe)) {
            fail(ErrorCode::invalid_argument, "subalgebra elements are linearly dependent");
        }
    }

    std::optional<std::vector<Rational>> coordinates(const Element& w) const {
        std::vector<Rational> rhs;
        rhs.reserve(elements_.size());
        for (const auto& e : elements_) rhs.push_back(dot(e, w));
        auto c = solve(gram_, rhs);
        if (!c) return std::nullopt;
        Element rebuilt(w.level());
        for (std::size_t m = 0; m < elements_.size(); ++m) rebuilt += (*c)[m] * elements_[m];
        if (rebuilt != w) return std::nullopt;
        return c;
    }

  private:
    const std::vector<Element>& elements_;
    std::vector<std::vector<Rational>> gram_;
};

std::optional<SignedBasis> as_signed_unit(const std::vector<Rational>& coords) {
    std::optional<SignedBasis> hit;
    for (std::size_t m = 0; m < coords.size(); ++m) {
        if (coords[m].is_zero()) continue;
        if (hit) return std::nullopt;
        if (coords[m] == Rational(1)) {
            hit = SignedBasis{1, m};
        } else if (coords[m] == Rational(-1)) {
            hit = SignedBasis{-1, m};
        } else {
            return std::nullopt;
        }
    }
    return hit;
}

void check_span_hypotheses(const Element& a, const Element& b) {
    if (auto what = span_hypothesis_failure(a, b)) fail(ErrorCode::hypothesis, "hypothesis violated: " + *what);
}

Element doubly_pure_fixed(const Element& x) {
    Element f(x.level());
    f.set(0, x[0]);
    const std::size_t t = tilde_unit_index(x.level());
    f.set(t, x[t]);
    return f;
}

void require_tau_level(unsigned level) {
    if (level < 4) fail(ErrorCode::invalid_argument, "tau/mu need level >= 4, got " + std::to_string(level));
}

} // namespace

std::optional<std::string> span_hypothesis_failure(const Element& a, const Element& b) {
    require_same_level(a, b, "span");
    if (a.level() < 4) return "level >= 4";
    if (a.is_zero()) return "a is nonzero";
    if (b.is_zero()) return "b is nonzero";
    if (!is_doubly_pure(a)) return "a is doubly pure";
    if (!is_doubly_pure(b)) return "b is doubly pure";
    if (norm_sq(a) != Rational(1)) return "norm_sq(a) = 1";
    if (norm_sq(b) != Rational(1)) return "norm_sq(b) = 1";
    const Element h[] = {Element::scalar(a.level(), 1), tilde(a), a, tilde_unit(a.level())};
    for (const auto& v : h)
        if (!dot(v, b).is_zero()) return "b lies in the orthogonal complement of H_a";
    if (!strongly_alternates_with(a, b)) return "a alternates strongly with b";
    return std::nullopt;
}

SubalgebraBasis make_subalgebra(std::vector<Element> elements, std::vector<std::string> labels) {
    if (elements.empty()) fail(ErrorCode::invalid_argument, "empty subalgebra basis");
    if (labels.size() != elements.size()) fail(ErrorCode::invalid_argument, "one label per element");
    for (const auto& e : elements) require_same_level(e, elements.front(), "subalgebra");
    SubalgebraBasis out;
    out.level = elements.front().level();
    out.elements = std::move(elements);
    out.labels = std::move(labels);
    const SpanSolver solver(out.elements);
    const std::size_t k = out.elements.size();
    out.closed = true;
    out.table.assign(k, std::vector<std::optional<std::vector<Rational>>>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            out.table[i][j] = solver.coordinates(multiply(out.elements[i], out.elements[j]));
            if (!out.table[i][j]) out.closed = false;
        }
    }
    return out;
}

bool table_matches(const SubalgebraBasis& basis, const SignTable& expected) {
    const std::size_t k = basis.elements.size();
    if (expected.size() != k) return false;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!basis.table[i][j]) return false;
            if (as_signed_unit(*basis.table[i][j]) != expected[i][j]) return false;
        }
    }
    return true;
}

SignTable level_sign_table(unsigned level) {
    const std::size_t dim = dimension_of(level);
    SignTable t(dim, std::vector<SignedBasis>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) t[i][j] = basis_product(level, i, j);
    }
    return t;
}

SignTable h_a_sign_table() {
    // order: e0, ~a, a, ~e0
    return {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
}

SubalgebraBasis h_a_basis(const Element& a, bool rescale) {
    if (a.level() < 3) fail(ErrorCode::invalid_argument, "H_a needs level >= 3");
    if (a.is_zero()) fail(ErrorCode::invalid_argument, "H_a needs a nonzero element");
    if (!is_doubly_pure(a)) fail(ErrorCode::invalid_argument, "H_a needs a doubly pure element");
    Element unit = a;
    const Rational n2 = norm_sq(a);
    if (n2 != Rational(1)) {
        if (!rescale) fail(ErrorCode::invalid_argument, "H_a needs norm_sq(a) = 1, got " + n2.str());
        if (!n2.is_square()) {
            fail(ErrorCode::invalid_argument, "cannot rescale: norm_sq(a) = " + n2.str() + " is not a rational square");
        }
        unit *= Rational(1) / n2.sqrt();
    }
    return make_subalgebra({Element::scalar(a.level(), 1), tilde(unit), unit, tilde_unit(a.level())},
                           {"e0", "~a", "a", "~e0"});
}

Split projection_split(const Element& x, std::span<const Element> basis) {
    Element inside(x.level());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        require_same_level(x, basis[i], "projection_split");
        if (basis[i].is_zero()) fail(ErrorCode::invalid_argument, "projection basis contains zero");
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!dot(basis[i], basis[j]).is_zero()) fail(ErrorCode::invalid_argument, "projection basis is not orthogonal");
        }
        inside += (dot(x, basis[i]) / norm_sq(basis[i])) * basis[i];
    }
    return {inside, x - inside};
}

Split projection_split(const Element& x, const SubalgebraBasis& basis) {
    return projection_split(x, std::span<const Element>(basis.elements));
}

SubalgebraBasis quaternion_span(const Element& a, const Element& b) {
    check_span_hypotheses(a, b);
    return make_subalgebra({Element::scalar(a.level(), 1), a, b, multiply(a, b)}, {"e0", "a", "b", "ab"});
}

SubalgebraBasis octonion_span(const Element& a, const Element& b) {
    check_span_hypotheses(a, b);
    const Element at = tilde(a);
    return make_subalgebra(
        {Element::scalar(a.level(), 1), a, b, multiply(a, b), multiply(at, b), -tilde(b), at, tilde_unit(a.level())},
        {"e0", "a", "b", "ab", "~a b", "-~b", "~a", "~e0"});
}

Identification identify_with_level(const SubalgebraBasis& basis, unsigned level) {
    Identification out{false, std::nullopt};
    const std::size_t k = basis.elements.size();
    if (k != dimension_of(level) || !basis.closed) return out;
    const SignTable target = level_sign_table(level);
    out.fixed_order = table_matches(basis, target);

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            for (std::size_t j = 0; j < k && ok; ++j) {
                const auto got = as_signed_unit(*basis.table[i][j]);
                const SignedBasis want = target[perm[i]][perm[j]];
                ok = got && got->sign == want.sign && perm[got->index] == want.index;
            }
        }
        if (ok) {
            out.permutation = perm;
            break;
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return out;
}

Element companion(const Element& a) {
    if (a.level() < 4) fail(ErrorCode::invalid_argument, "companion needs level >= 4");
    if (!is_pure(a)) fail(ErrorCode::invalid_argument, "companion needs a pure element");
    if (norm_sq(a) != Rational(1)) fail(ErrorCode::invalid_argument, "companion needs norm_sq(a) = 1");
    const Decomposition d = decompose(a);
    const unsigned n = a.level();
    Element b(n);
    if (d.rest.is_zero()) {
        b = -Element::basis(n, 1);
    } else {
        const Rational c2 = norm_sq(d.rest);
        if (!c2.is_square()) {
            fail(ErrorCode::invalid_argument,
                 "companion: doubly pure part has norm_sq " + c2.str() + ", not a rational square");
        }
        const Rational r = c2.sqrt();
        const Element c = (Rational(1) / r) * d.rest;
        b = d.tilde_part * c - r * tilde_unit(n);
    }
    if (!dot(a, b).is_zero() || norm_sq(b) != Rational(1) || !strongly_alternates_with(a, b)) {
        fail(ErrorCode::internal, "companion postcondition failed for " + format_element(a));
    }
    return b;
}

Element tau(const Element& x) {
    require_tau_level(x.level());
    return Element::join(x.lower_half(), -x.upper_half());
}

QuadraticElement::QuadraticElement(Element r) : rational(std::move(r)), root3(rational.level()) {}

QuadraticElement::QuadraticElement(Element r, Element s) : rational(std::move(r)), root3(std::move(s)) {
    require_same_level(rational, root3, "QuadraticElement");
}

QuadraticElement multiply(const QuadraticElement& x, const QuadraticElement& y) {
    // (p1 + r3 q1)(p2 + r3 q2) = p1 p2 + 3 q1 q2 + r3 (p1 q2 + q1 p2)
    return QuadraticElement(multiply(x.rational, y.rational) + Rational(3) * multiply(x.root3, y.root3),
                            multiply(x.rational, y.root3) + multiply(x.root3, y.rational));
}

QuadraticElement operator-(const QuadraticElement& x) { return QuadraticElement(-x.rational, -x.root3); }

QuadraticElement tilde(const QuadraticElement& x) { return QuadraticElement(tilde(x.rational), tilde(x.root3)); }

QuadraticElement tau(const QuadraticElement& x) { return QuadraticElement(tau(x.rational), tau(x.root3)); }

std::string format_quadratic(const QuadraticElement& x) {
    if (x.root3.is_zero()) return format_element(x.rational);
    return "(" + format_element(x.rational) + ") + sqrt(3)*(" + format_element(x.root3) + ")";
}

QuadraticElement mu(const Element& x) { return mu(QuadraticElement(x)); }

QuadraticElement mu(const QuadraticElement& x) {
    require_tau_level(x.level());
    // c w = -1/2 c - sqrt(3)/2 ~c for doubly pure c
    const Element fp = doubly_pure_fixed(x.rational);
    const Element fq = doubly_pure_fixed(x.root3);
    const Element cp = x.rational - fp;
    const Element cq = x.root3 - fq;
    const Rational half(1, 2);
    const Rational three_halves(3, 2);
    return QuadraticElement(fp - half * cp - three_halves * tilde(cq), fq - half * cq - half * tilde(cp));
}

} // namespace cdalg
