#include "cdalg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <new>
#include <span>
#include <sstream>
#include <string>

#include "cdalg/classification.hpp"
#include "cdalg/element.hpp"
#include "cdalg/error.hpp"
#include "cdalg/expression.hpp"
#include "cdalg/harness.hpp"
#include "cdalg/literal.hpp"
#include "cdalg/operators.hpp"
#include "cdalg/serialize.hpp"
#include "cdalg/structure_maps.hpp"
#include "cdalg/structure_table.hpp"

struct cd_element {
    cdalg::Element value;
};

namespace {

using cdalg::Element;
using cdalg::ErrorCode;

thread_local std::string last_error;

cd_status status_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return CD_INVALID_ARGUMENT;
    case ErrorCode::level_mismatch: return CD_LEVEL_MISMATCH;
    case ErrorCode::out_of_range: return CD_OUT_OF_RANGE;
    case ErrorCode::parse: return CD_PARSE;
    case ErrorCode::hypothesis: return CD_HYPOTHESIS;
    case ErrorCode::unknown_theorem: return CD_UNKNOWN_THEOREM;
    case ErrorCode::internal: return CD_INTERNAL;
    }
    return CD_INTERNAL;
}

template <class F>
cd_status guarded(F&& body) {
    try {
        body();
        return CD_OK;
    } catch (const cdalg::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CD_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CD_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) cdalg::fail(ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cd_element* wrap(Element x) { return new cd_element{std::move(x)}; }

std::string signed_basis_str(cdalg::SignedBasis b) { return (b.sign < 0 ? "-e" : "e") + std::to_string(b.index); }

std::string render_table(unsigned level, cd_format format) {
    const std::size_t dim = cdalg::dimension_of(level);
    const auto& table = cdalg::StructureTable::for_level(level);
    std::ostringstream os;
    if (format == CD_FORMAT_JSON) {
        cdalg::Json rows = cdalg::Json::array();
        for (std::size_t i = 0; i < dim; ++i) {
            cdalg::Json row = cdalg::Json::array();
            for (std::size_t j = 0; j < dim; ++j) row.push_back(signed_basis_str(table.product(i, j)));
            rows.push_back(std::move(row));
        }
        os << cdalg::Json{{"level", level}, {"table", std::move(rows)}}.dump();
    } else if (format == CD_FORMAT_CSV) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) os << (j ? "," : "") << signed_basis_str(table.product(i, j));
            os << '\n';
        }
    } else {
        const int w = static_cast<int>(std::to_string(dim - 1).size()) + 3;
        os << std::setw(w) << "" << " |";
        for (std::size_t j = 0; j < dim; ++j) os << std::setw(w) << ("e" + std::to_string(j));
        os << '\n' << std::string(static_cast<std::size_t>(w) + 2 + dim * static_cast<std::size_t>(w), '-') << '\n';
        for (std::size_t i = 0; i < dim; ++i) {
            os << std::setw(w) << ("e" + std::to_string(i)) << " |";
            for (std::size_t j = 0; j < dim; ++j) os << std::setw(w) << signed_basis_str(table.product(i, j));
            os << '\n';
        }
    }
    return os.str();
}

std::string render_status(const Element& a, const cdalg::AltStatus& s) {
    std::ostringstream os;
    os << "element: " << cdalg::format_element(a) << '\n'
       << "alternative: " << (s.alternative ? "true" : "false") << '\n'
       << "strongly_alternative: " << (s.strongly_alternative ? "true" : "false") << '\n';
    if (s.witness) {
        os << "witness: " << cdalg::format_element(*s.witness) << " ("
           << (s.witness_kind == cdalg::WitnessKind::left_alternative ? "(a, a, x) != 0" : "(a, x, x) != 0") << ")\n";
    }
    return os.str();
}

std::string cell_text(const std::vector<cdalg::Rational>& coords, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const auto& c = coords[k];
        if (c.is_zero()) continue;
        std::string label = labels[k];
        if (label.find(' ') != std::string::npos || label.front() == '-') label = "[" + label + "]";
        const bool neg = c.sign() < 0;
        const cdalg::Rational mag = c.abs();
        std::string term = mag.is_one() ? label : mag.str() + " " + label;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::string render_subalgebra(const cdalg::SubalgebraBasis& b, cd_format format) {
    if (format == CD_FORMAT_JSON) return cdalg::to_json(b).dump();
    const std::size_t k = b.elements.size();
    std::vector<std::vector<std::string>> cells(k, std::vector<std::string>(k));
    std::size_t w = 0;
    for (const auto& l : b.labels) w = std::max(w, l.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            cells[i][j] = b.table[i][j] ? cell_text(*b.table[i][j], b.labels) : "(outside)";
            w = std::max(w, cells[i][j].size());
        }
    std::ostringstream os;
    if (format == CD_FORMAT_CSV) {
        for (const auto& l : b.labels) os << ',' << l;
        os << '\n';
        for (std::size_t i = 0; i < k; ++i) {
            os << b.labels[i];
            for (std::size_t j = 0; j < k; ++j) os << ',' << cells[i][j];
            os << '\n';
        }
        return os.str();
    }
    for (std::size_t i = 0; i < k; ++i) os << b.labels[i] << " = " << cdalg::format_element(b.elements[i]) << '\n';
    os << '\n';
    const int iw = static_cast<int>(w) + 2;
    os << std::left << std::setw(iw) << "" << "|";
    for (const auto& l : b.labels) os << std::setw(iw) << l;
    os << '\n' << std::string(static_cast<std::size_t>(iw) * (k + 1) + 1, '-') << '\n';
    for (std::size_t i = 0; i < k; ++i) {
        os << std::setw(iw) << b.labels[i] << "|";
        for (std::size_t j = 0; j < k; ++j) os << std::setw(iw) << cells[i][j];
        os << '\n';
    }
    os << "\nclosed: " << (b.closed ? "true" : "false") << '\n';
    return os.str();
}

std::string render_reports(const std::vector<cdalg::TheoremReport>& reports, bool with_elapsed, cd_format format) {
    std::ostringstream os;
    if (format == CD_FORMAT_JSON) {
        for (const auto& r : reports) os << cdalg::to_json_line(r, with_elapsed) << '\n';
        return os.str();
    }
    std::size_t passed = 0, failed = 0, skipped = 0;
    os << std::left << std::setw(18) << "theorem" << std::setw(7) << "level" << std::setw(9) << "trials"
       << std::setw(9) << "result";
    if (with_elapsed) os << "ms";
    os << '\n';
    for (const auto& r : reports) {
        const char* result = r.skipped ? "skipped" : r.passed ? "pass" : "FAIL";
        if (r.skipped)
            ++skipped;
        else if (r.passed)
            ++passed;
        else
            ++failed;
        os << std::setw(18) << r.theorem_id << std::setw(7) << r.level << std::setw(9) << r.trials << std::setw(9)
           << result;
        if (with_elapsed) os << r.elapsed_ms;
        os << '\n';
        if (r.counterexample) os << "  counterexample: " << cdalg::to_json(*r.counterexample).dump() << '\n';
    }
    os << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return os.str();
}

} // namespace

extern "C" {

const char* cd_last_error(void) { return last_error.c_str(); }

const char* cd_status_name(cd_status status) {
    switch (status) {
    case CD_OK: return "ok";
    case CD_INVALID_ARGUMENT: return "invalid_argument";
    case CD_LEVEL_MISMATCH: return "level_mismatch";
    case CD_OUT_OF_RANGE: return "out_of_range";
    case CD_PARSE: return "parse";
    case CD_HYPOTHESIS: return "hypothesis";
    case CD_UNKNOWN_THEOREM: return "unknown_theorem";
    case CD_INTERNAL: return "internal";
    }
    return "unknown";
}

void cd_string_free(char* s) { std::free(s); }

cd_status cd_element_parse(unsigned level, const char* literal, cd_element** out) {
    return guarded([&] {
        require(literal, "literal");
        require(out, "out");
        *out = wrap(cdalg::parse_element(level, literal));
    });
}

cd_status cd_element_basis(unsigned level, size_t index, cd_element** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(Element::basis(level, index));
    });
}

cd_status cd_element_from_json(const char* json, cd_element** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        const auto j = cdalg::Json::parse(json, nullptr, false);
        if (j.is_discarded()) cdalg::fail(ErrorCode::parse, "malformed JSON");
        *out = wrap(cdalg::element_from_json(j));
    });
}

void cd_element_free(cd_element* x) { delete x; }

unsigned cd_element_level(const cd_element* x) { return x ? x->value.level() : 0; }

int cd_element_is_zero(const cd_element* x) { return x && x->value.is_zero() ? 1 : 0; }

int cd_element_equal(const cd_element* x, const cd_element* y) { return x && y && x->value == y->value ? 1 : 0; }

cd_status cd_element_format(const cd_element* x, char** out) {
    return guarded([&] {
        require(x, "x");
        require(out, "out");
        *out = copy_string(cdalg::format_element(x->value));
    });
}

cd_status cd_element_to_json(const cd_element* x, char** out) {
    return guarded([&] {
        require(x, "x");
        require(out, "out");
        *out = copy_string(cdalg::to_json(x->value).dump());
    });
}

cd_status cd_add(const cd_element* x, const cd_element* y, cd_element** out) {
    return guarded([&] {
        require(x, "x");
        require(y, "y");
        require(out, "out");
        *out = wrap(cdalg::add(x->value, y->value));
    });
}

cd_status cd_multiply(const cd_element* x, const cd_element* y, cd_element** out) {
    return guarded([&] {
        require(x, "x");
        require(y, "y");
        require(out, "out");
        *out = wrap(cdalg::multiply(x->value, y->value));
    });
}

cd_status cd_commutator(const cd_element* x, const cd_element* y, cd_element** out) {
    return guarded([&] {
        require(x, "x");
        require(y, "y");
        require(out, "out");
        *out = wrap(cdalg::commutator(x->value, y->value));
    });
}

cd_status cd_associator(const cd_element* x, const cd_element* y, const cd_element* z, cd_element** out) {
    return guarded([&] {
        require(x, "x");
        require(y, "y");
        require(z, "z");
        require(out, "out");
        *out = wrap(cdalg::associator(x->value, y->value, z->value));
    });
}

cd_status cd_conjugate(const cd_element* x, cd_element** out) {
    return guarded([&] {
        require(x, "x");
        require(out, "out");
        *out = wrap(cdalg::conjugate(x->value));
    });
}

cd_status cd_tilde(const cd_element* x, cd_element** out) {
    return guarded([&] {
        require(x, "x");
        require(out, "out");
        *out = wrap(cdalg::tilde(x->value));
    });
}

cd_status cd_norm_sq(const cd_element* x, char** out) {
    return guarded([&] {
        require(x, "x");
        require(out, "out");
        *out = copy_string(cdalg::norm_sq(x->value).str());
    });
}

cd_status cd_eval(unsigned level, const char* expression, cd_element** out) {
    return guarded([&] {
        require(expression, "expression");
        require(out, "out");
        *out = wrap(cdalg::evaluate(level, expression));
    });
}

cd_status cd_classify(const cd_element* a, cd_format format, char** out) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        const auto status = cdalg::is_strongly_alternative(a->value);
        *out = copy_string(format == CD_FORMAT_TEXT ? render_status(a->value, status)
                                                    : cdalg::to_json(a->value, status).dump());
    });
}

cd_status cd_alternates_with(const cd_element* a, const cd_element* b, int* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = cdalg::alternates_with(a->value, b->value) ? 1 : 0;
    });
}

cd_status cd_strongly_alternates_with(const cd_element* a, const cd_element* b, int* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = cdalg::strongly_alternates_with(a->value, b->value) ? 1 : 0;
    });
}

cd_status cd_normed_with(const cd_element* a, const cd_element* b, int* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = cdalg::normed_with(a->value, b->value) ? 1 : 0;
    });
}

cd_status cd_yui_witness(const cd_element* a, const cd_element* b, cd_element** out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        auto w = cdalg::yui_witness(a->value, b->value);
        *out = w ? wrap(std::move(*w)) : nullptr;
    });
}

cd_status cd_table(unsigned level, cd_format format, char** out) {
    return guarded([&] {
        require(out, "out");
        if (level > cdalg::StructureTable::kMaxCachedLevel)
            cdalg::fail(ErrorCode::out_of_range, "table level above " +
                                                     std::to_string(cdalg::StructureTable::kMaxCachedLevel));
        *out = copy_string(render_table(level, format));
    });
}

cd_status cd_matrix_csv(char side, const cd_element* a, char** out) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        if (side != 'L' && side != 'R') cdalg::fail(ErrorCode::invalid_argument, "side must be 'L' or 'R'");
        const auto m = side == 'L' ? cdalg::left_mult_matrix(a->value) : cdalg::right_mult_matrix(a->value);
        *out = copy_string(cdalg::to_csv(m));
    });
}

cd_status cd_subalgebra(cd_subalgebra_kind kind, const cd_element* a, const cd_element* b, cd_format format,
                        char** out) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        cdalg::SubalgebraBasis basis;
        switch (kind) {
        case CD_SUBALGEBRA_H_A: basis = cdalg::h_a_basis(a->value, true); break;
        case CD_SUBALGEBRA_QUATERNION:
            require(b, "b");
            basis = cdalg::quaternion_span(a->value, b->value);
            break;
        case CD_SUBALGEBRA_OCTONION:
            require(b, "b");
            basis = cdalg::octonion_span(a->value, b->value);
            break;
        default: cdalg::fail(ErrorCode::invalid_argument, "unknown subalgebra kind");
        }
        *out = copy_string(render_subalgebra(basis, format));
    });
}

cd_status cd_theorem_ids(char** out) {
    return guarded([&] {
        require(out, "out");
        std::string s;
        for (auto id : cdalg::theorem_ids()) s += std::string(id) + '\n';
        *out = copy_string(s);
    });
}

cd_status cd_verify(const unsigned* levels, size_t level_count, const char* theorem, uint64_t seed, size_t trials,
                    int with_elapsed, cd_format format, char** out, int* all_passed) {
    return guarded([&] {
        require(levels, "levels");
        require(out, "out");
        require(all_passed, "all_passed");
        cdalg::RandomSpec spec;
        spec.seed = seed;
        spec.trials = trials;
        std::vector<cdalg::TheoremReport> reports;
        const std::span<const unsigned> ls(levels, level_count);
        if (theorem == nullptr) {
            reports = cdalg::run_all(spec, ls);
        } else {
            for (unsigned level : ls) {
                spec.level = level;
                reports.push_back(cdalg::run_theorem(theorem, spec));
            }
        }
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.passed;
        *out = copy_string(render_reports(reports, with_elapsed != 0, format));
        *all_passed = ok ? 1 : 0;
    });
}

cd_status cd_replay(const char* counterexample_json, int* fails) {
    return guarded([&] {
        require(counterexample_json, "counterexample_json");
        require(fails, "fails");
        const auto j = cdalg::Json::parse(counterexample_json, nullptr, false);
        if (j.is_discarded()) cdalg::fail(ErrorCode::parse, "malformed JSON");
        *fails = cdalg::replay_fails(cdalg::counterexample_from_json(j)) ? 1 : 0;
    });
}

cd_status cd_norm_violation(unsigned level, char** out) {
    return guarded([&] {
        require(out, "out");
        const auto pair = cdalg::find_norm_violation(level);
        if (!pair) {
            *out = copy_string("null");
            return;
        }
        const auto& [x, y] = *pair;
        const cdalg::Json j{{"level", level},
                            {"x", cdalg::format_element(x)},
                            {"y", cdalg::format_element(y)},
                            {"norm_sq_xy", cdalg::norm_sq(cdalg::multiply(x, y)).str()},
                            {"product_of_norms", (cdalg::norm_sq(x) * cdalg::norm_sq(y)).str()}};
        *out = copy_string(j.dump());
    });
}

} // extern "C"
