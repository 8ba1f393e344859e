#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "cdalg/element.hpp"

namespace cdalg::detail {

/// A checkable statement over concrete arguments. Predicates return true when
/// the hypothesis fails (vacuous) or the conclusion holds.
struct ClaimDef {
    std::string_view name;
    std::size_t arity;
    bool (*holds)(std::span<const Element> args);
};

std::span<const ClaimDef> claim_table();
const ClaimDef* find_claim(std::string_view name);

} // namespace cdalg::detail
