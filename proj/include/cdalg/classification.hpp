#pragma once

#include <optional>
#include <span>

#include "cdalg/element.hpp"

namespace cdalg {

enum class WitnessKind {
    none,
    left_alternative, ///< witness x with (a, a, x) != 0
    middle_square,    ///< witness x with (a, x, x) != 0
};

struct AlternativeCheck {
    bool alternative;
    std::optional<Element> witness; ///< first e_i with (a, a, e_i) != 0
};

struct AltStatus {
    bool alternative = false;
    bool strongly_alternative = false;
    /// Present iff strongly_alternative is false. Re-evaluating the associator
    /// named by witness_kind at the witness gives a nonzero value.
    std::optional<Element> witness;
    WitnessKind witness_kind = WitnessKind::none;
};

/// (a, a, x) = 0 for every x. Linear in x, so the 2^n basis probes decide it.
AlternativeCheck is_alternative(const Element& a);

/// Alternative and (a, x, x) = 0 for every x. The quadratic form x -> (a, x, x)
/// vanishes iff its polarization (a, e_i, e_j) + (a, e_j, e_i) vanishes for all
/// i <= j. The witness is e_i for a nonzero diagonal term, otherwise e_i + e_j
/// for the first nonzero off-diagonal pair.
AltStatus is_strongly_alternative(const Element& a);

/// (a, a, b) = 0.
bool alternates_with(const Element& a, const Element& b);
/// (a, a, b) = 0 and (a, b, b) = 0.
bool strongly_alternates_with(const Element& a, const Element& b);
/// |ab|^2 = |a|^2 |b|^2.
bool normed_with(const Element& a, const Element& b);
/// normed_with(x, y) for every ordered pair, x == y included. Empty set: true.
bool is_normed_set(std::span<const Element> set);

/// The level-(n+1) element (r a, s a) for a pure alternative a in A_n.
Element lift_alternative(const Element& a, const Rational& r, const Rational& s);

/// First basis e_i with (a, e_i, b) != 0, or nothing. Requires level >= 4,
/// where nothing is returned exactly when the pure parts are linearly dependent.
std::optional<Element> yui_witness(const Element& a, const Element& b);

} // namespace cdalg
