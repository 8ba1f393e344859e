#include "cdalg/random.hpp"

#include <algorithm>
#include <vector>

#include "cdalg/error.hpp"

namespace cdalg {

ElementStream::ElementStream(const RandomSpec& spec) : spec_(spec), engine_(spec.seed) {
    if (spec.coefficient_bound == 0) fail(ErrorCode::invalid_argument, "coefficient bound must be positive");
}

std::uint64_t ElementStream::below(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::invalid_argument, "below(0)");
    const std::uint64_t limit = engine_.max() - engine_.max() % n;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

std::int64_t ElementStream::between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool ElementStream::coin() { return below(2) == 1; }

Rational ElementStream::rational() {
    const auto b = static_cast<std::int64_t>(spec_.coefficient_bound);
    const std::int64_t num = between(-b, b);
    std::int64_t den = between(-b, b - 1);
    if (den >= 0) ++den; // skip zero
    return Rational(num, den);
}

Rational ElementStream::nonzero_rational() {
    Rational r;
    do {
        r = rational();
    } while (r.is_zero());
    return r;
}

std::size_t ElementStream::allowed_index(unsigned level, Purity purity) {
    const std::size_t dim = dimension_of(level);
    while (true) {
        const std::size_t i = below(dim);
        if (purity != Purity::any && i == 0) continue;
        if (purity == Purity::doubly_pure && level > 0 && i == dim / 2) continue;
        return i;
    }
}

Element ElementStream::element(unsigned level, Purity purity) {
    Element x(level);
    for (std::size_t i = 0; i < x.dimension(); ++i) x.set(i, rational());
    if (purity != Purity::any) x.set(0, Rational());
    if (purity == Purity::doubly_pure && level > 0) x.set(tilde_unit_index(level), Rational());
    return x;
}

Element ElementStream::sparse(unsigned level, Purity purity, std::size_t terms) {
    Element x(level);
    for (std::size_t t = 0; t < terms; ++t) {
        const std::size_t i = allowed_index(level, purity);
        x.set(i, x[i] + nonzero_rational());
    }
    return x;
}

Element ElementStream::unit_doubly_pure(unsigned level) {
    // Inverse stereographic projection of a random rational point in Q^(k-1)
    // lands on the rational unit sphere in Q^k.
    const std::size_t k = 1 + below(3);
    std::vector<std::size_t> support;
    while (support.size() < k) {
        const std::size_t i = allowed_index(level, Purity::doubly_pure);
        if (std::find(support.begin(), support.end(), i) == support.end()) support.push_back(i);
    }
    std::vector<Rational> v;
    Rational v2;
    for (std::size_t t = 0; t + 1 < k; ++t) {
        v.push_back(rational());
        v2 += v.back() * v.back();
    }
    const Rational denom = v2 + Rational(1);
    Element x(level);
    for (std::size_t t = 0; t + 1 < k; ++t) x.set(support[t], Rational(2) * v[t] / denom);
    Rational last = (v2 - Rational(1)) / denom;
    if (k == 1 || last.is_zero()) last = coin() ? Rational(1) : Rational(-1);
    if (k > 1 && (v2 - Rational(1)).is_zero()) {
        // v on the unit sphere already: the point (2v, 0)/2 = v is a unit vector
        last = Rational();
    }
    x.set(support[k - 1], last);
    return x;
}

Element ElementStream::pure_alternative(unsigned level) {
    if (level <= 3) return sparse(level, Purity::pure, 1 + below(4));
    const Element lower = pure_alternative(level - 1);
    const Rational r = rational();
    const Rational s = rational();
    Element lifted = Element::join(r * lower, s * lower);
    if (coin()) lifted.set(tilde_unit_index(level), rational());
    return lifted;
}

} // namespace cdalg
