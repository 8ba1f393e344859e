#include "claims.hpp"

#include <algorithm>

#include "cdalg/classification.hpp"
#include "cdalg/operators.hpp"
#include "cdalg/structure_maps.hpp"

namespace cdalg::detail {
namespace {

using Args = std::span<const Element>;

bool implies(bool p, bool q) { return !p || q; }

std::vector<Element> h_a_orthogonal(const Element& a) {
    const unsigned n = a.level();
    return {Element::scalar(n, 1), tilde(a), a, tilde_unit(n)};
}

bool in_span_e0_te0(const Element& x) { return decompose(x).rest.is_zero(); }

bool tilde_left_factor(Args v) {
    const Element& a = v[0];
    const Element& x = v[1];
    return implies(is_doubly_pure(x), multiply(tilde(a), x) == -tilde(multiply(a, x)));
}

bool tilde_orthogonality(Args v) {
    const Element& a = v[0];
    const Element& x = v[1];
    if (!is_doubly_pure(a) || !is_doubly_pure(x)) return true;
    const Element at = tilde(a);
    const Element xt = tilde(x);
    const bool one = (multiply(at, x) + multiply(xt, a)).is_zero() == dot(a, x).is_zero();
    const bool two = (multiply(a, x) - multiply(xt, at)).is_zero() == dot(at, x).is_zero();
    const bool three = multiply(at, x).is_zero() == multiply(a, x).is_zero();
    return one && two && three;
}

bool h_a_quaternion(Args v) {
    const Element& a = v[0];
    if (a.level() < 3 || a.is_zero() || !is_doubly_pure(a) || norm_sq(a) != Rational(1)) return true;
    const SubalgebraBasis h = h_a_basis(a);
    if (!h.closed || !table_matches(h, h_a_sign_table())) return false;
    for (const auto& x : h.elements)
        for (const auto& y : h.elements)
            for (const auto& z : h.elements)
                if (!associator(x, y, z).is_zero()) return false;
    return true;
}

bool tilde_swap(Args v) {
    const Element& a = v[0];
    const Element& b = v[1];
    if (a.level() < 3 || !is_doubly_pure(a) || !is_doubly_pure(b)) return true;
    const Element at = tilde(a);
    const bool part1 = (multiply(at, b) == multiply(a, tilde(b))) == (dot(a, b).is_zero() && dot(at, b).is_zero());
    const bool part2 = implies(associator(a, tilde_unit(a.level()), b).is_zero(), in_span_e0_te0(multiply(a, b)));
    return part1 && part2;
}

bool tilde_unit_associator(Args v) {
    const Element& a = v[0];
    const Element& b = v[1];
    if (a.level() < 3 || a.is_zero() || !is_doubly_pure(a) || !is_doubly_pure(b)) return true;
    const Element te = tilde_unit(a.level());
    const Split s = projection_split(b, h_a_orthogonal(a));
    const Element left = associator(a, te, b);
    const Element right = -associator(te, a, b);
    if (s.outside.is_zero()) return left.is_zero() && right.is_zero();
    if (s.inside.is_zero()) {
        const Element twice = Rational(2) * multiply(tilde(a), b);
        return left == twice && right == twice;
    }
    return true;
}

bool tilde_middle_associator(Args v) {
    const Element& a = v[0];
    const Element& x = v[1];
    if (a.level() < 3 || a.is_zero() || !is_doubly_pure(a)) return true;
    const Split s = projection_split(x, h_a_orthogonal(a));
    const Element lhs = associator(tilde(a), x, a);
    if (s.outside.is_zero()) return lhs.is_zero();
    if (s.inside.is_zero()) return lhs == Rational(-2) * multiply(a, multiply(a, tilde(x)));
    return true;
}

// Contrapositive: a nonzero doubly pure a has some basis projection into
// H_a-perp that it does not annihilate.
bool complement_not_annihilated(Args v) {
    const Element& a = v[0];
    if (a.level() < 4 || a.is_zero() || !is_doubly_pure(a)) return true;
    const auto h = h_a_orthogonal(a);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        const Split s = projection_split(Element::basis(a.level(), i), h);
        if (!multiply(a, s.outside).is_zero()) return true;
    }
    return false;
}

bool basis_scan_vanishes(const Element& a, const Element& b) {
    for (std::size_t i = 0; i < a.dimension(); ++i)
        if (!associator(a, Element::basis(a.level(), i), b).is_zero()) return false;
    return true;
}

bool doubly_pure_associator_rank(Args v) {
    const Element& a = v[0];
    const Element& b = v[1];
    if (a.level() < 4 || a.is_zero() || b.is_zero() || !is_doubly_pure(a) || !is_doubly_pure(b)) return true;
    return basis_scan_vanishes(a, b) == linearly_dependent(a, b);
}

bool associator_rank(Args v) {
    const Element& a = v[0];
    const Element& b = v[1];
    if (a.level() < 4 || a.is_zero() || b.is_zero()) return true;
    return !yui_witness(a, b).has_value() == linearly_dependent(pure_part(a), pure_part(b));
}

bool doubly_pure_part_alternative(Args v) {
    const Element& a = v[0];
    if (a.level() < 4 || !is_pure(a)) return true;
    const Element c = decompose(a).rest;
    if (c.is_zero()) return true;
    return is_alternative(a).alternative == is_alternative(c).alternative;
}

bool doubled_square(Args v) {
    if (!is_pure(v[0]) || !is_pure(v[1])) return true;
    return check_doubled_square(v[0], v[1], v[2], v[3]);
}

bool doubled_alternative(Args v) {
    const Element& a = v[0];
    const Element& b = v[1];
    if (a.level() < 3 || !is_pure(a) || !is_pure(b)) return true;
    const bool i = is_alternative(Element::join(a, b)).alternative;
    const bool ii = is_alternative(a).alternative && is_alternative(b).alternative;
    const bool iii = linearly_dependent(a, b);
    return i == (ii && iii) && implies(i, op_S(a, b).is_zero());
}

// The coefficient pair (r, s) travels as the level-1 element r e0 + s e1.
bool lift_stays_alternative(Args v) {
    const Element& a = v[0];
    const Element& rs = v[1];
    if (rs.level() != 1 || !is_pure(a) || !is_alternative(a).alternative) return true;
    return is_alternative(lift_alternative(a, rs[0], rs[1])).alternative;
}

bool middle_slot_nucleus(Args v) {
    const Element& a = v[0];
    if (a.level() < 3 || a.is_zero()) return true;
    const unsigned n = a.level();
    bool all_vanish = true;
    for (std::size_t i = 0; i < a.dimension() && all_vanish; ++i)
        for (std::size_t j = 0; j < a.dimension() && all_vanish; ++j)
            all_vanish = associator(Element::basis(n, i), a, Element::basis(n, j)).is_zero();
    return implies(all_vanish, pure_part(a).is_zero());
}

bool strongly_alternative_pure(Args v) {
    const Element& alpha = v[0];
    if (alpha.level() < 4 || !is_pure(alpha)) return true;
    return implies(is_strongly_alternative(alpha).strongly_alternative, in_span_e0_te0(alpha));
}

bool automorphisms_multiplicative(Args v) {
    const Element& x = v[0];
    const Element& y = v[1];
    if (x.level() < 4) return true;
    const Element xy = multiply(x, y);
    return tau(xy) == multiply(tau(x), tau(y)) && mu(xy) == multiply(mu(x), mu(y));
}

bool automorphism_relations(Args v) {
    const Element& x = v[0];
    const unsigned n = x.level();
    if (n < 4) return true;
    const Element te = tilde_unit(n);
    const QuadraticElement q(x);
    const bool fixed_unit = tau(te) == -te && mu(te) == QuadraticElement(te);
    const bool orders = tau(tau(x)) == x && mu(mu(mu(x))) == q;
    const bool braid = mu(tau(x)) == tau(mu(mu(x)));
    // phi(~x) = +-~phi(x) with the sign of phi(~e0)
    const bool tilde_sign = tau(tilde(x)) == -tilde(tau(x)) && mu(tilde(x)) == tilde(mu(x));
    return fixed_unit && orders && braid && tilde_sign;
}

bool spans_closed(Args v) {
    const Element& a = v[0];
    const Element& b = v[1];
    if (span_hypothesis_failure(a, b)) return true;
    const SubalgebraBasis q = quaternion_span(a, b);
    const SubalgebraBasis o = octonion_span(a, b);
    if (!q.closed || !o.closed) return false;
    const Identification iq = identify_with_level(q, 2);
    const Identification io = identify_with_level(o, 3);
    return (iq.fixed_order || iq.permutation) && (io.fixed_order || io.permutation);
}

bool normed_subsets(Args v) {
    const Element& a = v[0];
    const Element& b = v[1];
    if (a.level() < 4 || a.is_zero() || b.is_zero() || !is_pure(a) || !is_pure(b)) return true;
    const Element ab = multiply(a, b);
    const Element pair_ab[] = {a, b};
    const Element pair_a_ab[] = {a, ab};
    const Element triple[] = {a, b, ab};
    const bool one = alternates_with(a, b) == (is_normed_set(pair_ab) && is_normed_set(pair_a_ab));
    const bool two = strongly_alternates_with(a, b) == is_normed_set(triple);
    return one && two;
}

bool local_chain(Args v) {
    const Element& a = v[0];
    const Element& b = v[1];
    const bool strong = strongly_alternates_with(a, b);
    const bool alt = alternates_with(a, b);
    const bool first = implies(strong, alt);
    const bool second = implies(is_pure(a) && alt, normed_with(a, b));
    const bool third = implies(is_pure(a) && normed_with(a, b), dot(b, associator(a, a, b)).is_zero());
    return first && second && third;
}

bool flexibility(Args v) {
    const Element& x = v[0];
    const Element& y = v[1];
    return multiply(multiply(x, y), x) == multiply(x, multiply(y, x));
}

bool strong_basis(Args v) {
    // A basis element is strongly alternative exactly when it is e0 or ~e0.
    const Element& e = v[0];
    if (e.level() == 0 || e.nonzero_count() != 1) return true;
    const std::size_t t = tilde_unit_index(e.level());
    const bool expected = !e[0].is_zero() || !e[t].is_zero();
    return is_strongly_alternative(e).strongly_alternative == expected;
}

bool norms_multiply(Args v) { return normed_with(v[0], v[1]); }

bool operator_square(Args v) {
    const Element& a = v[0];
    if (!is_pure(a)) return true;
    const Matrix l = left_mult_matrix(a);
    const auto t = scalar_value(l * l);
    const bool square_is_scalar = t && *t == -norm_sq(a);
    return is_alternative(a).alternative == square_is_scalar;
}

constexpr ClaimDef kClaims[] = {
    {"lemma_1_1", 2, tilde_left_factor},
    {"corollary_1_2", 2, tilde_orthogonality},
    {"corollary_1_3", 1, h_a_quaternion},
    {"proposition_1_4", 2, tilde_swap},
    {"corollary_1_5", 2, tilde_unit_associator},
    {"lemma_1_6", 2, tilde_middle_associator},
    {"lemma_2_1", 1, complement_not_annihilated},
    {"theorem_2_2", 2, doubly_pure_associator_rank},
    {"yui_2_3", 2, associator_rank},
    {"proposition_3_1", 1, doubly_pure_part_alternative},
    {"lemma_3_2", 4, doubled_square},
    {"theorem_3_3", 2, doubled_alternative},
    {"theorem_3_3.lift", 2, lift_stays_alternative},
    {"lemma_4_1", 1, middle_slot_nucleus},
    {"theorem_4_2", 1, strongly_alternative_pure},
    {"theorem_4_2.basis", 1, strong_basis},
    {"corollary_4_3.multiplicative", 2, automorphisms_multiplicative},
    {"corollary_4_3.relations", 1, automorphism_relations},
    {"theorem_5_1", 2, spans_closed},
    {"theorem_5_2", 2, normed_subsets},
    {"chain_5", 2, local_chain},
    {"flexibility", 2, flexibility},
    {"normed", 2, norms_multiply},
    {"operator_square", 1, operator_square},
};

} // namespace

std::span<const ClaimDef> claim_table() { return kClaims; }

const ClaimDef* find_claim(std::string_view name) {
    const auto it = std::find_if(std::begin(kClaims), std::end(kClaims), [&](const ClaimDef& c) { return c.name == name; });
    return it == std::end(kClaims) ? nullptr : &*it;
}

} // namespace cdalg::detail
