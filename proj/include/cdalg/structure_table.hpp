#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cdalg {

/// e_i e_j = sign * e_index. Basis products are always signed basis elements.
struct SignedBasis {
    int sign;
    std::size_t index;

    friend bool operator==(const SignedBasis&, const SignedBasis&) = default;
};

/// Signed basis product by recursion on the index bits, O(level).
SignedBasis basis_product(unsigned level, std::size_t i, std::size_t j);

/// Precomputed e_i e_j table for one level. Tables are built once per level on
/// first use (thread-safe) and are read-only afterwards. For levels up to
/// kVerifiedLevel the build cross-checks every entry against
/// multiply_recursive() and refuses to publish a disagreeing table.
class StructureTable {
  public:
    static constexpr unsigned kMaxCachedLevel = 10;
    static constexpr unsigned kVerifiedLevel = 5;

    /// Throws out_of_range above kMaxCachedLevel.
    static const StructureTable& for_level(unsigned level);

    unsigned level() const noexcept { return level_; }
    std::size_t dimension() const noexcept { return dim_; }

    SignedBasis product(std::size_t i, std::size_t j) const noexcept {
        const std::uint32_t e = entries_[i * dim_ + j];
        return {(e & kNegative) ? -1 : 1, static_cast<std::size_t>(e & ~kNegative)};
    }

    explicit StructureTable(unsigned level);

  private:
    static constexpr std::uint32_t kNegative = 0x80000000u;

    unsigned level_;
    std::size_t dim_;
    std::vector<std::uint32_t> entries_;
};

} // namespace cdalg
