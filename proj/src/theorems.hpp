#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cdalg/harness.hpp"

namespace cdalg::detail {

/// Counts claim evaluations for one theorem run and keeps the first failure.
/// After a failure every further check is refused, so strategies can simply
/// return when check() yields false.
class Trials {
  public:
    bool check(std::string_view claim, std::vector<Element> args);
    std::size_t count() const noexcept { return count_; }
    bool failed() const noexcept { return failure_.has_value(); }
    const std::optional<Counterexample>& failure() const noexcept { return failure_; }
    Json& details() noexcept { return details_; }

  private:
    std::size_t count_ = 0;
    std::optional<Counterexample> failure_;
    Json details_ = Json::object();
};

struct TheoremDef {
    std::string_view id;
    unsigned min_level;
    /// Exhaustive part (where cheap) followed by `trials` sampled cases.
    void (*run)(Trials& t, ElementStream& s, unsigned level, std::size_t trials);
};

std::span<const TheoremDef> theorem_table();

} // namespace cdalg::detail
