#include "theorems.hpp"

#include <algorithm>

#include "cdalg/classification.hpp"
#include "cdalg/error.hpp"
#include "cdalg/literal.hpp"
#include "cdalg/structure_maps.hpp"
#include "claims.hpp"

namespace cdalg::detail {

bool Trials::check(std::string_view claim, std::vector<Element> args) {
    if (failure_) return false;
    const ClaimDef* def = find_claim(claim);
    if (def == nullptr || def->arity != args.size()) fail(ErrorCode::internal, "bad claim use: " + std::string(claim));
    ++count_;
    bool ok;
    try {
        ok = def->holds(args);
    } catch (const Error& e) {
        details_["error"] = e.what();
        ok = false;
    }
    if (!ok) failure_ = Counterexample{std::string(claim), std::move(args)};
    return ok;
}

namespace {

Element basis(unsigned n, std::size_t i) { return Element::basis(n, i); }

// Dense samples up to level 4; sparse above, where dense products get costly.
Element sample(ElementStream& s, unsigned n, Purity p) { return n <= 4 ? s.element(n, p) : s.sparse(n, p, 6); }

Element nonzero_sample(ElementStream& s, unsigned n, Purity p) {
    Element x = sample(s, n, p);
    while (x.is_zero()) x = sample(s, n, p);
    return x;
}

std::vector<std::size_t> doubly_pure_indices(unsigned n) {
    std::vector<std::size_t> out;
    const std::size_t h = tilde_unit_index(n);
    for (std::size_t i = 1; i < dimension_of(n); ++i)
        if (i != h) out.push_back(i);
    return out;
}

std::vector<Element> h_a_list(const Element& a) {
    const unsigned n = a.level();
    return {Element::scalar(n, 1), tilde(a), a, tilde_unit(n)};
}

/// Removes the components along each (pairwise orthogonal) nonzero v.
Element orthogonalize(Element x, const std::vector<Element>& against) {
    for (const auto& v : against) {
        const Rational vv = norm_sq(v);
        if (!vv.is_zero()) x -= (dot(x, v) / vv) * v;
    }
    return x;
}

Element combination(ElementStream& s, const std::vector<Element>& span) {
    Element x(span.front().level());
    for (const auto& v : span) x += s.rational() * v;
    return x;
}

Element rational_pick(ElementStream& s, std::span<const std::size_t> from, unsigned n) {
    return basis(n, from[s.below(from.size())]);
}

// ---------------------------------------------------------------------------

void run_tilde_left_factor(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    if (n <= 4) {
        for (std::size_t i = 0; i < dimension_of(n); ++i)
            for (std::size_t j : doubly_pure_indices(n))
                if (!t.check("lemma_1_1", {basis(n, i), basis(n, j)})) return;
    }
    for (std::size_t k = 0; k < trials; ++k)
        if (!t.check("lemma_1_1", {sample(s, n, Purity::any), sample(s, n, Purity::doubly_pure)})) return;
}

void run_tilde_orthogonality(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    const auto dp = doubly_pure_indices(n);
    if (n <= 4) {
        for (std::size_t i : dp)
            for (std::size_t j : dp)
                if (!t.check("corollary_1_2", {basis(n, i), basis(n, j)})) return;
    }
    for (std::size_t k = 0; k < trials; ++k) {
        const Element a = nonzero_sample(s, n, Purity::doubly_pure);
        const Element at = tilde(a);
        Element x = sample(s, n, Purity::doubly_pure);
        switch (k % 6) {
        case 1: x = orthogonalize(x, {a}); break;
        case 2: x = orthogonalize(x, {at}); break;
        case 3: x = orthogonalize(x, {a, at}); break;
        case 4: x = s.rational() * a; break;
        case 5: x = s.rational() * at; break;
        default: break;
        }
        if (!t.check("corollary_1_2", {a, x})) return;
    }
}

void run_h_a_quaternion(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    for (std::size_t i : doubly_pure_indices(n)) {
        if (!t.check("corollary_1_3", {basis(n, i)})) return;
        if (!t.check("corollary_1_3", {-basis(n, i)})) return;
    }
    for (std::size_t k = 0; k < trials; ++k)
        if (!t.check("corollary_1_3", {s.unit_doubly_pure(n)})) return;
}

/// b drawn from families that make each hypothesis branch reachable: raw,
/// in H_a-perp, inside the doubly pure part of H_a, and mixed.
Element structured_partner(ElementStream& s, const Element& a, std::size_t k) {
    const unsigned n = a.level();
    const Element raw = sample(s, n, Purity::doubly_pure);
    switch (k % 4) {
    case 1: return orthogonalize(raw, h_a_list(a));
    case 2: return s.rational() * a + s.rational() * tilde(a);
    case 3: return orthogonalize(raw, h_a_list(a)) + s.rational() * a;
    default: return raw;
    }
}

void run_pairwise_doubly_pure(Trials& t, ElementStream& s, unsigned n, std::size_t trials, std::string_view claim) {
    const auto dp = doubly_pure_indices(n);
    if (n <= 4) {
        for (std::size_t i : dp)
            for (std::size_t j : dp)
                if (!t.check(claim, {basis(n, i), basis(n, j)})) return;
    }
    for (std::size_t k = 0; k < trials; ++k) {
        const Element a = nonzero_sample(s, n, Purity::doubly_pure);
        if (!t.check(claim, {a, structured_partner(s, a, k)})) return;
    }
}

void run_tilde_swap(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    run_pairwise_doubly_pure(t, s, n, trials, "proposition_1_4");
}

void run_tilde_unit_associator(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    run_pairwise_doubly_pure(t, s, n, trials, "corollary_1_5");
}

void run_tilde_middle_associator(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    const auto dp = doubly_pure_indices(n);
    if (n <= 4) {
        for (std::size_t i : dp)
            for (std::size_t j = 0; j < dimension_of(n); ++j)
                if (!t.check("lemma_1_6", {basis(n, i), basis(n, j)})) return;
    }
    for (std::size_t k = 0; k < trials; ++k) {
        const Element a = nonzero_sample(s, n, Purity::doubly_pure);
        Element x = sample(s, n, Purity::any);
        if (k % 3 == 1) x = orthogonalize(x, h_a_list(a));
        if (k % 3 == 2) x = combination(s, h_a_list(a));
        if (!t.check("lemma_1_6", {a, x})) return;
    }
}

void run_complement_not_annihilated(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    for (std::size_t i : doubly_pure_indices(n))
        if (!t.check("lemma_2_1", {basis(n, i)})) return;
    for (std::size_t k = 0; k < trials; ++k) {
        const Element a = k % 2 == 0 ? nonzero_sample(s, n, Purity::doubly_pure) : s.unit_doubly_pure(n);
        if (!t.check("lemma_2_1", {a})) return;
    }
}

void run_doubly_pure_associator_rank(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    if (n == 4) {
        const auto dp = doubly_pure_indices(n);
        for (std::size_t i : dp)
            for (std::size_t j : dp)
                if (!t.check("theorem_2_2", {basis(n, i), basis(n, j)})) return;
    }
    std::size_t dependent = 0;
    for (std::size_t k = 0; k < trials; ++k) {
        const Element a = nonzero_sample(s, n, Purity::doubly_pure);
        Element b = nonzero_sample(s, n, Purity::doubly_pure);
        if (k % 2 == 1) {
            b = s.nonzero_rational() * a;
            ++dependent;
        }
        if (!t.check("theorem_2_2", {a, b})) return;
    }
    t.details()["dependent_samples"] = dependent;
}

void run_associator_rank(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    if (n == 4) {
        for (std::size_t i = 0; i < dimension_of(n); ++i)
            for (std::size_t j = 0; j < dimension_of(n); ++j)
                if (!t.check("yui_2_3", {basis(n, i), basis(n, j)})) return;
    }
    std::size_t dependent = 0;
    std::size_t witnessed = 0;
    for (std::size_t k = 0; k < trials; ++k) {
        const Element a = nonzero_sample(s, n, Purity::any);
        Element b = nonzero_sample(s, n, Purity::any);
        if (k % 2 == 1) {
            // dependent pure parts, arbitrary real parts
            b = s.rational() * pure_part(a) + Element::scalar(n, s.rational());
            if (b.is_zero()) b = Element::scalar(n, 1);
            ++dependent;
        }
        if (!t.check("yui_2_3", {a, b})) return;
        if (!linearly_dependent(pure_part(a), pure_part(b))) ++witnessed;
    }
    t.details()["dependent_samples"] = dependent;
    t.details()["independent_samples"] = witnessed;
}

void run_doubly_pure_part_alternative(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    for (std::size_t i = 1; i < dimension_of(n); ++i)
        for (long sv : {0L, 1L, -2L}) {
            Element a = basis(n, i);
            a.set(tilde_unit_index(n), a[tilde_unit_index(n)] + Rational(sv));
            if (!t.check("proposition_3_1", {a})) return;
        }
    for (std::size_t k = 0; k < trials; ++k) {
        Element c = k % 2 == 0 ? s.pure_alternative(n) : sample(s, n, Purity::pure);
        c.set(tilde_unit_index(n), Rational());
        const Element a = s.nonzero_rational() * c + s.rational() * tilde_unit(n);
        if (!t.check("proposition_3_1", {a})) return;
    }
}

void run_doubled_square(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    if (n == 3) {
        // a, b over {0, e1, ..., e7}; x, y over the basis: 8^4 tuples
        const std::size_t dim = dimension_of(n);
        auto pure_or_zero = [&](std::size_t i) { return i == 0 ? Element(n) : basis(n, i); };
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k)
                    for (std::size_t l = 0; l < dim; ++l)
                        if (!t.check("lemma_3_2", {pure_or_zero(i), pure_or_zero(j), basis(n, k), basis(n, l)})) return;
        return;
    }
    for (std::size_t k = 0; k < trials; ++k) {
        if (!t.check("lemma_3_2", {sample(s, n, Purity::pure), sample(s, n, Purity::pure), sample(s, n, Purity::any),
                                   sample(s, n, Purity::any)}))
            return;
    }
}

void run_doubled_alternative(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    const std::size_t dim = dimension_of(n);
    if (n <= 3) {
        auto pure_or_zero = [&](std::size_t i) { return i == 0 ? Element(n) : basis(n, i); };
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (!t.check("theorem_3_3", {pure_or_zero(i), pure_or_zero(j)})) return;
        for (std::size_t i = 1; i < dim; ++i)
            if (!t.check("theorem_3_3", {basis(n, i), Rational(-3) * basis(n, i)})) return;
    }
    std::size_t lifted_alternative = 0;
    for (std::size_t k = 0; k < trials; ++k) {
        Element a = k % 2 == 0 ? s.pure_alternative(n) : sample(s, n, Purity::pure);
        Element b = k % 4 < 2 ? s.rational() * a : sample(s, n, Purity::pure);
        if (!t.check("theorem_3_3", {a, b})) return;
        lifted_alternative += is_alternative(Element::join(a, b)).alternative ? 1 : 0;
        const Element rs(1, {s.rational(), s.rational()});
        if (!t.check("theorem_3_3.lift", {s.pure_alternative(n), rs})) return;
    }
    t.details()["sampled_alternative_joins"] = lifted_alternative;
}

void run_middle_slot_nucleus(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    if (n <= 4) {
        for (std::size_t i = 0; i < dimension_of(n); ++i)
            if (!t.check("lemma_4_1", {basis(n, i)})) return;
    }
    for (std::size_t k = 0; k < trials; ++k) {
        Element a = k % 4 == 0 ? Element::scalar(n, s.nonzero_rational()) : nonzero_sample(s, n, Purity::any);
        if (!t.check("lemma_4_1", {a})) return;
    }
}

void run_strongly_alternative_pure(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    Json found = Json::array();
    for (std::size_t i = 0; i < dimension_of(n); ++i) {
        const Element e = basis(n, i);
        if (!t.check("theorem_4_2.basis", {e})) return;
        if (is_strongly_alternative(e).strongly_alternative) found.push_back("e" + std::to_string(i));
    }
    t.details()["strongly_alternative_basis"] = found;
    const auto pure_idx = [&] {
        std::vector<std::size_t> v;
        for (std::size_t i = 1; i < dimension_of(n); ++i) v.push_back(i);
        return v;
    }();
    std::size_t strong = 0;
    for (std::size_t k = 0; k < trials; ++k) {
        const Element te = tilde_unit(n);
        Element alpha(n);
        switch (k % 5) {
        case 0: alpha = s.rational() * te; break;
        case 1: alpha = s.rational() * te + s.nonzero_rational() * rational_pick(s, pure_idx, n); break;
        case 2: alpha = s.sparse(n, Purity::pure, 2); break;
        case 3: alpha = s.pure_alternative(n); break;
        default: alpha = sample(s, n, Purity::pure); break;
        }
        if (!t.check("theorem_4_2", {alpha})) return;
        if (is_strongly_alternative(alpha).strongly_alternative) ++strong;
    }
    t.details()["strongly_alternative_samples"] = strong;
}

void run_automorphisms(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    if (n == 4) {
        for (std::size_t i = 0; i < dimension_of(n); ++i) {
            for (std::size_t j = 0; j < dimension_of(n); ++j)
                if (!t.check("corollary_4_3.multiplicative", {basis(n, i), basis(n, j)})) return;
            if (!t.check("corollary_4_3.relations", {basis(n, i)})) return;
        }
    }
    for (std::size_t k = 0; k < trials; ++k) {
        if (!t.check("corollary_4_3.multiplicative", {sample(s, n, Purity::any), sample(s, n, Purity::any)})) return;
        if (!t.check("corollary_4_3.relations", {sample(s, n, Purity::any)})) return;
    }
}

void run_spans_closed(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t fixed_order = 0;
    Json permutations = Json::array();
    auto attempt = [&](const Element& a, const Element& b) {
        if (span_hypothesis_failure(a, b)) {
            ++rejected;
            return true;
        }
        ++accepted;
        if (!t.check("theorem_5_1", {a, b})) return false;
        const Identification iq = identify_with_level(quaternion_span(a, b), 2);
        const Identification io = identify_with_level(octonion_span(a, b), 3);
        if (iq.fixed_order && io.fixed_order) {
            ++fixed_order;
        } else {
            Json entry{{"a", format_element(a)}, {"b", format_element(b)}};
            if (!iq.fixed_order) entry["quaternion"] = *iq.permutation;
            if (!io.fixed_order) entry["octonion"] = *io.permutation;
            permutations.push_back(std::move(entry));
        }
        return true;
    };
    const auto dp = doubly_pure_indices(n);
    if (!attempt(basis(n, 1), basis(n, 2))) return;
    if (n == 4) {
        for (std::size_t i : dp)
            for (std::size_t j : dp)
                if (!attempt(basis(n, i), basis(n, j))) return;
    }
    for (std::size_t k = 0; k < trials; ++k) {
        const std::size_t i = dp[s.below(dp.size())];
        const std::size_t j = dp[s.below(dp.size())];
        const std::size_t l = dp[s.below(dp.size())];
        const Element a = s.coin() ? basis(n, i) : -basis(n, i);
        // b = p e_j + q e_l with p^2 + q^2 = 1
        const Rational u = s.rational();
        const Rational d = u * u + Rational(1);
        const Element b = (Rational(2) * u / d) * basis(n, j) + ((Rational(1) - u * u) / d) * basis(n, l);
        if (j == l) continue;
        if (!attempt(a, b)) return;
    }
    t.details()["accepted"] = accepted;
    t.details()["rejected"] = rejected;
    t.details()["fixed_order"] = fixed_order;
    t.details()["permuted"] = permutations;
}

/// Pure pairs mixing random, basis and structured partners.
std::pair<Element, Element> pure_pair(ElementStream& s, unsigned n, std::size_t k) {
    const Element a = nonzero_sample(s, n, Purity::pure);
    switch (k % 5) {
    case 1: return {basis(n, 1 + s.below(dimension_of(n) - 1)), a};
    case 2: return {a, s.nonzero_rational() * a};
    case 3: return {s.pure_alternative(n), nonzero_sample(s, n, Purity::pure)};
    case 4: {
        const Element x = basis(n, 1 + s.below(dimension_of(n) - 1)) + basis(n, 1 + s.below(dimension_of(n) - 1));
        const Element y = basis(n, 1 + s.below(dimension_of(n) - 1));
        return {x.is_zero() ? y : x, y};
    }
    default: return {a, nonzero_sample(s, n, Purity::pure)};
    }
}

void run_normed_subsets(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    if (n == 4) {
        for (std::size_t i = 1; i < dimension_of(n); ++i)
            for (std::size_t j = 1; j < dimension_of(n); ++j)
                if (!t.check("theorem_5_2", {basis(n, i), basis(n, j)})) return;
    }
    std::size_t alternating = 0;
    std::size_t strongly = 0;
    for (std::size_t k = 0; k < trials; ++k) {
        auto [a, b] = pure_pair(s, n, k);
        if (!t.check("theorem_5_2", {a, b})) return;
        alternating += alternates_with(a, b) ? 1 : 0;
        strongly += strongly_alternates_with(a, b) ? 1 : 0;
    }
    t.details()["sampled_alternating"] = alternating;
    t.details()["sampled_strongly_alternating"] = strongly;
}

void run_local_chain(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    for (std::size_t k = 0; k < trials; ++k) {
        auto [a, b] = pure_pair(s, n, k);
        if (k % 7 == 6) b = sample(s, n, Purity::any);
        if (!t.check("chain_5", {a, b})) return;
    }
}

void run_flexibility(Trials& t, ElementStream& s, unsigned n, std::size_t trials) {
    if (n <= 4) {
        for (std::size_t i = 0; i < dimension_of(n); ++i)
            for (std::size_t j = 0; j < dimension_of(n); ++j)
                if (!t.check("flexibility", {basis(n, i), basis(n, j)})) return;
    }
    for (std::size_t k = 0; k < trials; ++k)
        if (!t.check("flexibility", {sample(s, n, Purity::any), sample(s, n, Purity::any)})) return;
}

constexpr TheoremDef kTheorems[] = {
    {"lemma_1_1", 1, run_tilde_left_factor},
    {"corollary_1_2", 2, run_tilde_orthogonality},
    {"corollary_1_3", 3, run_h_a_quaternion},
    {"proposition_1_4", 3, run_tilde_swap},
    {"corollary_1_5", 3, run_tilde_unit_associator},
    {"lemma_1_6", 3, run_tilde_middle_associator},
    {"lemma_2_1", 4, run_complement_not_annihilated},
    {"theorem_2_2", 4, run_doubly_pure_associator_rank},
    {"yui_2_3", 4, run_associator_rank},
    {"proposition_3_1", 4, run_doubly_pure_part_alternative},
    {"lemma_3_2", 3, run_doubled_square},
    {"theorem_3_3", 3, run_doubled_alternative},
    {"lemma_4_1", 3, run_middle_slot_nucleus},
    {"theorem_4_2", 4, run_strongly_alternative_pure},
    {"corollary_4_3", 4, run_automorphisms},
    {"theorem_5_1", 4, run_spans_closed},
    {"theorem_5_2", 4, run_normed_subsets},
    {"chain_5", 4, run_local_chain},
    {"flexibility", 0, run_flexibility},
};

} // namespace

std::span<const TheoremDef> theorem_table() { return kTheorems; }

} // namespace cdalg::detail
