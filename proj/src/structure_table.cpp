#include "cdalg/structure_table.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "cdalg/element.hpp"
#include "cdalg/error.hpp"

namespace cdalg {

SignedBasis basis_product(unsigned level, std::size_t i, std::size_t j) {
    int sign = 1;
    std::size_t offset = 0;
    // Each step peels the top bit of both indices and applies one branch of the
    // doubling formula to the basis halves.
    for (unsigned n = level; n > 0; --n) {
        const std::size_t half = std::size_t{1} << (n - 1);
        const bool i_hi = i >= half;
        const bool j_hi = j >= half;
        if (!i_hi && !j_hi) continue;
        if (!i_hi && j_hi) {
            // (e_i, 0)(0, e_j') = (0, e_j' e_i)
            const std::size_t jj = j - half;
            j = i;
            i = jj;
            offset += half;
        } else if (i_hi && !j_hi) {
            // (0, e_i')(e_j, 0) = (0, e_i' conj(e_j))
            i -= half;
            if (j != 0) sign = -sign;
            offset += half;
        } else {
            // (0, e_i')(0, e_j') = (-conj(e_j') e_i', 0)
            const std::size_t ii = i - half;
            const std::size_t jj = j - half;
            sign = -sign;
            if (jj != 0) sign = -sign;
            i = jj;
            j = ii;
        }
    }
    return {sign, offset};
}

StructureTable::StructureTable(unsigned level) : level_(level), dim_(dimension_of(level)), entries_(dim_ * dim_) {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const SignedBasis p = basis_product(level, i, j);
            entries_[i * dim_ + j] = static_cast<std::uint32_t>(p.index) | (p.sign < 0 ? kNegative : 0u);
        }
    }
    if (level > kVerifiedLevel) return;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const SignedBasis p = product(i, j);
            Element expected = Element::basis(level, p.index);
            if (p.sign < 0) expected = -expected;
            if (multiply_recursive(Element::basis(level, i), Element::basis(level, j)) != expected) {
                fail(ErrorCode::internal, "structure table disagrees with the doubling recursion at level " +
                                              std::to_string(level) + " for e" + std::to_string(i) + " e" +
                                              std::to_string(j));
            }
        }
    }
}

const StructureTable& StructureTable::for_level(unsigned level) {
    if (level > kMaxCachedLevel) {
        fail(ErrorCode::out_of_range, "no cached structure table above level " + std::to_string(kMaxCachedLevel));
    }
    static std::array<std::once_flag, kMaxCachedLevel + 1> once;
    static std::array<std::unique_ptr<const StructureTable>, kMaxCachedLevel + 1> tables;
    std::call_once(once[level], [level] { tables[level] = std::make_unique<const StructureTable>(level); });
    return *tables[level];
}

} // namespace cdalg
