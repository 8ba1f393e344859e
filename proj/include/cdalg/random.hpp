#pragma once

#include <cstdint>
#include <random>

#include "cdalg/element.hpp"

namespace cdalg {

enum class Purity { any, pure, doubly_pure };

struct RandomSpec {
    std::uint64_t seed = 0;
    unsigned level = 4;
    /// Numerators and denominators are drawn from [-bound, bound] (denominator != 0).
    std::uint32_t coefficient_bound = 8;
    Purity purity = Purity::any;
    /// Number of sampled cases per randomized family.
    std::size_t trials = 200;
};

/// Deterministic element generator. The bit stream depends only on the seed
/// (std::mt19937_64 is fully specified); bounded draws use rejection sampling
/// rather than std::uniform_int_distribution, whose output is
/// implementation-defined.
class ElementStream {
  public:
    explicit ElementStream(const RandomSpec& spec);

    std::uint64_t below(std::uint64_t n);
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    bool coin();

    Rational rational();
    Rational nonzero_rational();

    /// Dense element; purity clears e0 (and ~e0).
    Element element(unsigned level, Purity purity);
    Element element() { return element(spec_.level, spec_.purity); }
    /// Element supported on `terms` random coordinates allowed by `purity`.
    Element sparse(unsigned level, Purity purity, std::size_t terms);
    /// Doubly pure element with norm_sq exactly 1, supported on <= 3 coordinates.
    Element unit_doubly_pure(unsigned level);
    /// Pure alternative element: any pure element at level <= 3, above that
    /// t ~e0 + (r a, s a) with a pure alternative one level down.
    Element pure_alternative(unsigned level);

    const RandomSpec& spec() const noexcept { return spec_; }

  private:
    std::size_t allowed_index(unsigned level, Purity purity);

    RandomSpec spec_;
    std::mt19937_64 engine_;
};

} // namespace cdalg
