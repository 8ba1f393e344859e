#include "cdalg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "cdalg/classification.hpp"
#include "cdalg/error.hpp"
#include "claims.hpp"
#include "theorems.hpp"

namespace cdalg {
namespace {

const std::vector<std::string_view>& id_list() {
    static const std::vector<std::string_view> ids = [] {
        std::vector<std::string_view> v;
        for (const auto& t : detail::theorem_table()) v.push_back(t.id);
        return v;
    }();
    return ids;
}

const detail::TheoremDef& find_theorem(std::string_view id) {
    for (const auto& t : detail::theorem_table())
        if (t.id == id) return t;
    std::string known;
    for (auto k : id_list()) known += (known.empty() ? "" : ", ") + std::string(k);
    fail(ErrorCode::unknown_theorem, "unknown theorem '" + std::string(id) + "'; registered: " + known);
}

} // namespace

std::span<const std::string_view> theorem_ids() { return id_list(); }

unsigned minimum_level(std::string_view theorem_id) { return find_theorem(theorem_id).min_level; }

TheoremReport run_theorem(std::string_view theorem_id, const RandomSpec& spec, RunOptions options) {
    const auto& def = find_theorem(theorem_id);
    TheoremReport report;
    report.theorem_id = std::string(def.id);
    report.level = spec.level;
    report.seed = spec.seed;
    if (spec.level < def.min_level && !options.force) {
        report.skipped = true;
        report.details["minimum_level"] = def.min_level;
        return report;
    }
    const auto start = std::chrono::steady_clock::now();
    ElementStream stream(spec);
    detail::Trials trials;
    def.run(trials, stream, spec.level, spec.trials);
    report.trials = trials.count();
    report.passed = !trials.failed();
    report.counterexample = trials.failure();
    report.details = std::move(trials.details());
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<TheoremReport> run_all(const RandomSpec& spec, std::span<const unsigned> levels) {
    std::vector<std::future<TheoremReport>> jobs;
    for (unsigned level : levels) {
        RandomSpec s = spec;
        s.level = level;
        for (auto id : id_list())
            jobs.push_back(std::async(std::launch::async, [s, id] { return run_theorem(id, s); }));
    }
    std::vector<TheoremReport> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

std::vector<std::string_view> claim_names() {
    std::vector<std::string_view> out;
    for (const auto& c : detail::claim_table()) out.push_back(c.name);
    return out;
}

bool claim_holds(std::string_view claim, std::span<const Element> args) {
    const auto* def = detail::find_claim(claim);
    if (def == nullptr) fail(ErrorCode::unknown_theorem, "unknown claim '" + std::string(claim) + "'");
    if (def->arity != args.size())
        fail(ErrorCode::invalid_argument, "claim '" + std::string(claim) + "' takes " + std::to_string(def->arity) +
                                              " arguments, got " + std::to_string(args.size()));
    return def->holds(args);
}

bool replay_fails(const Counterexample& c) {
    try {
        return !claim_holds(c.claim, c.args);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::unknown_theorem || e.code() == ErrorCode::invalid_argument) throw;
        return true;
    }
}

std::optional<std::pair<Element, Element>> find_norm_violation(unsigned level) {
    const std::size_t dim = dimension_of(level);
    std::vector<Element> sums;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) sums.push_back(Element::basis(level, i) + Element::basis(level, j));
    for (const auto& x : sums)
        for (const auto& y : sums)
            if (!normed_with(x, y)) return std::pair{x, y};
    return std::nullopt;
}

Json to_json(const Counterexample& c) {
    Json args = Json::array();
    for (const auto& a : c.args) args.push_back(to_json(a));
    return Json{{"claim", c.claim}, {"args", std::move(args)}};
}

Counterexample counterexample_from_json(const Json& j) {
    try {
        Counterexample c;
        c.claim = j.at("claim").get<std::string>();
        for (const auto& a : j.at("args")) c.args.push_back(element_from_json(a));
        return c;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse, std::string("bad counterexample JSON: ") + e.what());
    }
}

Json to_json(const TheoremReport& r, bool with_elapsed) {
    Json j{{"theorem_id", r.theorem_id}, {"level", r.level}, {"seed", r.seed},
           {"trials", r.trials},         {"passed", r.passed}, {"skipped", r.skipped}};
    if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
    if (!r.details.empty()) j["details"] = r.details;
    if (with_elapsed) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string to_json_line(const TheoremReport& r, bool with_elapsed) { return to_json(r, with_elapsed).dump(); }

} // namespace cdalg
