#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdalg/element.hpp"
#include "cdalg/structure_table.hpp"

namespace cdalg {

/// An ordered list of linearly independent elements together with the
/// coordinates of every pairwise product in their span.
struct SubalgebraBasis {
    unsigned level = 0;
    std::vector<Element> elements;
    std::vector<std::string> labels;
    /// table[i][j] = coordinates of elements[i] * elements[j] over `elements`,
    /// or nothing when the product leaves the span.
    std::vector<std::vector<std::optional<std::vector<Rational>>>> table;
    /// Every product lies in the span.
    bool closed = false;
};

/// Computes the product table and closure flag by exact span membership.
/// Throws invalid_argument when the elements are linearly dependent.
SubalgebraBasis make_subalgebra(std::vector<Element> elements, std::vector<std::string> labels);

/// Expected product table written as signed element indices.
using SignTable = std::vector<std::vector<SignedBasis>>;

/// True when every product is exactly +-(one listed element) as `expected` says.
bool table_matches(const SubalgebraBasis& basis, const SignTable& expected);

/// Table of A_level under e_i <-> elements[i].
SignTable level_sign_table(unsigned level);

/// Quaternion table of H_a in the order (e0, ~a, a, ~e0) for a unit doubly
/// pure a. Differs from the commonly printed layout in the (~a, a) and
/// (a, ~a) entries: ~a a = +~e0 and a ~a = -~e0 under this product.
SignTable h_a_sign_table();

/// H_a = span{e0, ~a, a, ~e0} for nonzero doubly pure a at level >= 3.
/// norm_sq(a) must be 1; with `rescale` a is divided by |a| when that is
/// rational, otherwise rejected.
SubalgebraBasis h_a_basis(const Element& a, bool rescale = false);

struct Split {
    Element inside;
    Element outside;
};

/// Orthogonal projection of x onto span(basis) and its complement. The basis
/// must be pairwise orthogonal with nonzero members.
Split projection_split(const Element& x, std::span<const Element> basis);
Split projection_split(const Element& x, const SubalgebraBasis& basis);

/// Name of the first unmet span hypothesis (see quaternion_span), or nothing.
std::optional<std::string> span_hypothesis_failure(const Element& a, const Element& b);

/// span{e0, a, b, ab}. Requires level >= 4, a and b doubly pure with
/// norm_sq 1, b orthogonal to H_a and a alternating strongly with b. A failed
/// hypothesis is reported by name (ErrorCode::hypothesis).
SubalgebraBasis quaternion_span(const Element& a, const Element& b);

/// span{e0, a, b, ab, ~a b, -~b, ~a, ~e0} under the same hypotheses.
SubalgebraBasis octonion_span(const Element& a, const Element& b);

struct Identification {
    /// Listed order matches e0, e1, ... of the target level.
    bool fixed_order;
    /// Some ordering that works (element i <-> e_{permutation[i]}), e0 fixed.
    std::optional<std::vector<std::size_t>> permutation;
};

/// Compares the table with A_level, first under the listed order, then over
/// all orderings that keep e0 first.
Identification identify_with_level(const SubalgebraBasis& basis, unsigned level);

/// For a pure unit a = r c + s ~e0 (c the unit doubly pure direction, r > 0)
/// returns b = s c - r ~e0: orthogonal to a, same norm, and a alternates
/// strongly with b. For a = +-~e0 returns -e1. Requires level >= 4 and a
/// rational |c|.
Element companion(const Element& a);

/// (x, y) -> (x, -y). Level >= 4.
Element tau(const Element& x);

/// rational + sqrt(3) * root3, both parts in A_n.
struct QuadraticElement {
    Element rational;
    Element root3;

    explicit QuadraticElement(Element r);
    QuadraticElement(Element r, Element s);

    unsigned level() const { return rational.level(); }
    friend bool operator==(const QuadraticElement&, const QuadraticElement&) = default;
};

QuadraticElement multiply(const QuadraticElement& x, const QuadraticElement& y);
QuadraticElement operator-(const QuadraticElement& x);
QuadraticElement tilde(const QuadraticElement& x);
QuadraticElement tau(const QuadraticElement& x);
std::string format_quadratic(const QuadraticElement& x);

/// The order-3 automorphism: fixes e0 and ~e0 and sends the doubly pure part
/// c to c w, w = -1/2 e0 - sqrt(3)/2 ~e0 (a 120 degree turn in every
/// (c, ~c) plane). Level >= 4.
QuadraticElement mu(const Element& x);
QuadraticElement mu(const QuadraticElement& x);

} // namespace cdalg
