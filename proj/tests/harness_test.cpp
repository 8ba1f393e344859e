#include "doctest.h"

#include <algorithm>

#include "cdalg/classification.hpp"
#include "cdalg/error.hpp"
#include "cdalg/harness.hpp"
#include "support.hpp"

using namespace cdalg;
using test::el;

TEST_CASE("registry covers exactly the statement list") {
    const std::vector<std::string_view> expected{
        "lemma_1_1",   "corollary_1_2", "corollary_1_3",   "proposition_1_4", "corollary_1_5",
        "lemma_1_6",   "lemma_2_1",     "theorem_2_2",     "yui_2_3",         "proposition_3_1",
        "lemma_3_2",   "theorem_3_3",   "lemma_4_1",       "theorem_4_2",     "corollary_4_3",
        "theorem_5_1", "theorem_5_2",   "chain_5",         "flexibility"};
    const auto ids = theorem_ids();
    CHECK(std::vector<std::string_view>(ids.begin(), ids.end()) == expected);
}

TEST_CASE("element stream") {
    RandomSpec spec;
    spec.seed = 99;
    spec.coefficient_bound = 3;
    ElementStream a(spec), b(spec);
    for (int k = 0; k < 20; ++k) {
        const Element x = a.element(4, Purity::any);
        CHECK(x == b.element(4, Purity::any));
        for (const auto& c : x.coeffs()) {
            CHECK(c.abs() <= Rational(3));
        }
        const Element p = a.element(4, Purity::pure);
        b.element(4, Purity::pure);
        CHECK(is_pure(p));
        const Element d = a.sparse(5, Purity::doubly_pure, 3);
        b.sparse(5, Purity::doubly_pure, 3);
        CHECK(is_doubly_pure(d));
        const Element u = a.unit_doubly_pure(5);
        b.unit_doubly_pure(5);
        CHECK(norm_sq(u) == Rational(1));
        CHECK(is_doubly_pure(u));
        const Element alt = a.pure_alternative(5);
        b.pure_alternative(5);
        CHECK(is_pure(alt));
        CHECK(is_alternative(alt).alternative);
    }
    spec.seed = 100;
    ElementStream other(spec);
    ElementStream again(RandomSpec{99, 4, 3, Purity::any, 200});
    CHECK(other.element(4, Purity::any) != again.element(4, Purity::any));
    spec.coefficient_bound = 0;
    CHECK_THROWS_AS(ElementStream{spec}, Error);
}

TEST_CASE("reports are deterministic apart from timing") {
    RandomSpec spec;
    spec.seed = 0;
    spec.level = 4;
    spec.trials = 15;
    for (auto id : theorem_ids()) {
        const TheoremReport r1 = run_theorem(id, spec);
        const TheoremReport r2 = run_theorem(id, spec);
        CAPTURE(id);
        CHECK(r1.passed);
        CHECK(to_json_line(r1, false) == to_json_line(r2, false));
    }
}

TEST_CASE("every statement passes at its smallest level and is skipped below it") {
    RandomSpec spec;
    spec.seed = 3;
    spec.trials = 10;
    for (auto id : theorem_ids()) {
        CAPTURE(id);
        spec.level = std::max(3u, minimum_level(id));
        const TheoremReport r = run_theorem(id, spec);
        CHECK(r.passed);
        CHECK_FALSE(r.skipped);
        CHECK(r.trials > 0);
        if (minimum_level(id) > 0) {
            spec.level = minimum_level(id) - 1;
            const TheoremReport s = run_theorem(id, spec);
            CHECK(s.skipped);
            CHECK(s.passed);
            CHECK(s.trials == 0);
        }
    }
}

TEST_CASE("documented runs") {
    RandomSpec spec;
    spec.level = 3;
    const TheoremReport l = run_theorem("lemma_3_2", spec);
    CHECK(l.passed);
    CHECK(l.trials == 4096);

    spec.level = 4;
    const TheoremReport t = run_theorem("theorem_4_2", spec);
    CHECK(t.passed);
    CHECK(t.details["strongly_alternative_basis"] == Json::array({"e0", "e8"}));

    spec.seed = 42;
    spec.trials = 200;
    const TheoremReport y = run_theorem("yui_2_3", spec);
    CHECK(y.passed);
    CHECK(y.details["dependent_samples"].get<int>() == 100);

    const TheoremReport f = run_theorem("theorem_5_1", spec);
    CHECK(f.passed);
    CHECK(f.details["accepted"].get<int>() >= 20);
}

TEST_CASE("a forced failure carries a replayable counterexample") {
    RandomSpec spec;
    spec.level = 3;
    const TheoremReport r = run_theorem("theorem_4_2", spec, RunOptions{true});
    CHECK_FALSE(r.passed);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->claim == "theorem_4_2.basis");
    CHECK(replay_fails(*r.counterexample));

    const Json j = to_json(r);
    CHECK(j["passed"] == false);
    CHECK(j.contains("elapsed_ms"));
    CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));
    const Counterexample back = counterexample_from_json(Json::parse(j["counterexample"].dump()));
    CHECK(back.claim == r.counterexample->claim);
    CHECK(back.args == r.counterexample->args);
    CHECK(replay_fails(back));
}

TEST_CASE("registry errors") {
    try {
        run_theorem("lemma_9_9", RandomSpec{});
        FAIL("accepted unknown id");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::unknown_theorem);
        CHECK(std::string(e.what()).find("flexibility") != std::string::npos);
    }
    const Element one[] = {el(4, "e1")};
    CHECK_THROWS_AS(claim_holds("flexibility", one), Error);
    CHECK_THROWS_AS(claim_holds("no_such_claim", one), Error);
    CHECK(claim_holds("theorem_4_2", one));
    const auto names = claim_names();
    CHECK(std::find(names.begin(), names.end(), "theorem_3_3.lift") != names.end());
}

TEST_CASE("norm violation search") {
    for (unsigned n = 0; n <= 3; ++n) CHECK_FALSE(find_norm_violation(n).has_value());
    const auto found = find_norm_violation(4);
    REQUIRE(found);
    CHECK_FALSE(normed_with(found->first, found->second));
    const Element pair[] = {found->first, found->second};
    CHECK(replay_fails(Counterexample{"normed", {found->first, found->second}}));
    CHECK_FALSE(claim_holds("normed", pair));

    // independent lexicographic scan with the oracle product
    std::optional<std::pair<oracle::Vec, oracle::Vec>> first;
    for (std::size_t i = 0; i < 16 && !first; ++i)
        for (std::size_t j = i + 1; j < 16 && !first; ++j)
            for (std::size_t k = 0; k < 16 && !first; ++k)
                for (std::size_t l = k + 1; l < 16 && !first; ++l) {
                    const oracle::Vec x = oracle::sum(16, i, j), y = oracle::sum(16, k, l);
                    if (oracle::norm_sq(oracle::mul(x, y)) != 4) first = std::pair{x, y};
                }
    REQUIRE(first);
    CHECK(test::to_vec(found->first) == first->first);
    CHECK(test::to_vec(found->second) == first->second);
}

TEST_CASE("run_all keeps level-major registry order") {
    RandomSpec spec;
    spec.trials = 3;
    const unsigned levels[] = {2, 3};
    const auto reports = run_all(spec, levels);
    REQUIRE(reports.size() == 2 * theorem_ids().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].theorem_id == theorem_ids()[i % theorem_ids().size()]);
        CHECK(reports[i].level == levels[i / theorem_ids().size()]);
        CHECK(reports[i].passed);
    }
}
