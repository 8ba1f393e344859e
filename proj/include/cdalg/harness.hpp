#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdalg/element.hpp"
#include "cdalg/random.hpp"
#include "cdalg/serialize.hpp"

namespace cdalg {

/// A named claim together with the arguments on which it failed.
struct Counterexample {
    std::string claim;
    std::vector<Element> args;
};

struct TheoremReport {
    std::string theorem_id;
    unsigned level = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    bool passed = true;
    /// The level is below the statement's range; nothing was checked.
    bool skipped = false;
    std::optional<Counterexample> counterexample;
    /// Strategy-specific facts (exhaustive counts, found sets, ...).
    Json details = Json::object();
    std::int64_t elapsed_ms = 0;
};

/// Registered statement ids, in registry order.
std::span<const std::string_view> theorem_ids();
/// Smallest level at which the statement is asserted.
unsigned minimum_level(std::string_view theorem_id);

struct RunOptions {
    /// Run below minimum_level() instead of reporting skipped. Used to provoke
    /// failures on purpose.
    bool force = false;
};

/// Throws unknown_theorem (message lists the registry) for an unknown id.
TheoremReport run_theorem(std::string_view theorem_id, const RandomSpec& spec, RunOptions options = {});
/// Every registered statement at every level, level-major.
std::vector<TheoremReport> run_all(const RandomSpec& spec, std::span<const unsigned> levels);

/// Claims are the predicates the theorems are checked through; the names are
/// what counterexamples record.
std::vector<std::string_view> claim_names();
/// Re-evaluates a claim. Throws unknown_theorem for an unknown claim and
/// invalid_argument for a wrong argument count.
bool claim_holds(std::string_view claim, std::span<const Element> args);
/// True when the recorded failure reproduces (the claim is false again).
bool replay_fails(const Counterexample& c);

/// First (x, y) with x = e_i + e_j (i < j), y = e_k + e_l (k < l) in
/// lexicographic (i, j, k, l) order and norm_sq(xy) != norm_sq(x) norm_sq(y).
std::optional<std::pair<Element, Element>> find_norm_violation(unsigned level);

Json to_json(const Counterexample& c);
Counterexample counterexample_from_json(const Json& j);
Json to_json(const TheoremReport& r, bool with_elapsed = true);
/// One compact JSON line, no trailing newline.
std::string to_json_line(const TheoremReport& r, bool with_elapsed = true);

} // namespace cdalg
