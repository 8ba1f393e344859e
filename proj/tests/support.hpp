#pragma once

#include <random>
#include <string_view>

#include "cdalg/element.hpp"
#include "cdalg/literal.hpp"
#include "oracle.hpp"

namespace test {

inline cdalg::Element el(unsigned level, std::string_view literal) { return cdalg::parse_element(level, literal); }

inline oracle::Vec to_vec(const cdalg::Element& x) {
    oracle::Vec v;
    for (const auto& c : x.coeffs()) v.push_back(c.raw());
    return v;
}

inline cdalg::Element from_vec(unsigned level, const oracle::Vec& v) {
    std::vector<cdalg::Rational> c;
    for (const auto& q : v) c.emplace_back(q);
    return cdalg::Element(level, std::move(c));
}

/// Small seeded generator for property tests: coefficients p/q with |p|, |q| <= 5.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    long small(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    cdalg::Rational rational() {
        long q = small(1, 5);
        return cdalg::Rational(small(-5, 5), small(0, 1) ? q : -q);
    }
    cdalg::Element dense(unsigned level, bool pure = false) {
        cdalg::Element x(level);
        for (std::size_t i = pure ? 1 : 0; i < x.dimension(); ++i) x.set(i, rational());
        return x;
    }
    cdalg::Element sparse(unsigned level, std::size_t terms, bool pure = false) {
        cdalg::Element x(level);
        for (std::size_t t = 0; t < terms; ++t) {
            std::size_t i = rng_() % x.dimension();
            if (pure && i == 0) i = 1 % x.dimension();
            x.set(i, x[i] + rational());
        }
        return x;
    }

  private:
    std::mt19937_64 rng_;
};

} // namespace test
