#include "cdalg/classification.hpp"

#include <string>
#include <vector>

#include "cdalg/error.hpp"

namespace cdalg {

AlternativeCheck is_alternative(const Element& a) {
    const unsigned n = a.level();
    const Element aa = multiply(a, a);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        const Element e = Element::basis(n, i);
        if (multiply(aa, e) != multiply(a, multiply(a, e))) return {false, e};
    }
    return {true, std::nullopt};
}

AltStatus is_strongly_alternative(const Element& a) {
    AltStatus status;
    AlternativeCheck alt = is_alternative(a);
    status.alternative = alt.alternative;
    if (!alt.alternative) {
        status.witness = std::move(alt.witness);
        status.witness_kind = WitnessKind::left_alternative;
        return status;
    }

    const unsigned n = a.level();
    const std::size_t dim = a.dimension();
    std::vector<Element> basis;
    std::vector<Element> a_times;
    basis.reserve(dim);
    a_times.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        basis.push_back(Element::basis(n, i));
        a_times.push_back(multiply(a, basis.back()));
    }
    // (a, e_i, e_j) = (a e_i) e_j - a (e_i e_j)
    auto assoc = [&](std::size_t i, std::size_t j) {
        return multiply(a_times[i], basis[j]) - multiply(a, multiply(basis[i], basis[j]));
    };
    for (std::size_t i = 0; i < dim; ++i) {
        if (!assoc(i, i).is_zero()) {
            status.witness = basis[i];
            status.witness_kind = WitnessKind::middle_square;
            return status;
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            if (!(assoc(i, j) + assoc(j, i)).is_zero()) {
                status.witness = basis[i] + basis[j];
                status.witness_kind = WitnessKind::middle_square;
                return status;
            }
        }
    }
    status.strongly_alternative = true;
    return status;
}

bool alternates_with(const Element& a, const Element& b) { return associator(a, a, b).is_zero(); }

bool strongly_alternates_with(const Element& a, const Element& b) {
    return alternates_with(a, b) && associator(a, b, b).is_zero();
}

bool normed_with(const Element& a, const Element& b) {
    require_same_level(a, b, "normed_with");
    return norm_sq(multiply(a, b)) == norm_sq(a) * norm_sq(b);
}

bool is_normed_set(std::span<const Element> set) {
    for (const auto& x : set) {
        for (const auto& y : set) {
            if (!normed_with(x, y)) return false;
        }
    }
    return true;
}

Element lift_alternative(const Element& a, const Rational& r, const Rational& s) {
    if (!is_pure(a)) fail(ErrorCode::invalid_argument, "lift_alternative: element is not pure");
    if (!is_alternative(a).alternative) fail(ErrorCode::invalid_argument, "lift_alternative: element is not alternative");
    return Element::join(r * a, s * a);
}

std::optional<Element> yui_witness(const Element& a, const Element& b) {
    require_same_level(a, b, "yui_witness");
    if (a.level() < 4) {
        fail(ErrorCode::invalid_argument,
             "yui_witness needs level >= 4, got " + std::to_string(a.level()));
    }
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        Element x = Element::basis(a.level(), i);
        if (!associator(a, x, b).is_zero()) return x;
    }
    return std::nullopt;
}

} // namespace cdalg
