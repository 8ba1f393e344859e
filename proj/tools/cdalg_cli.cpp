// Command-line front end over the C API in cdalg.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdalg.h"

namespace {

constexpr unsigned kWarnLevel = 8;

struct Failure {
    cd_status status;
};

struct ElementDeleter {
    void operator()(cd_element* x) const { cd_element_free(x); }
};
using ElementPtr = std::unique_ptr<cd_element, ElementDeleter>;

void check(cd_status s) {
    if (s != CD_OK) throw Failure{s};
}

std::string take(char* s) {
    std::string out(s);
    cd_string_free(s);
    return out;
}

ElementPtr parse(unsigned level, const std::string& literal) {
    cd_element* x = nullptr;
    check(cd_element_parse(level, literal.c_str(), &x));
    return ElementPtr(x);
}

cd_format format_of(const std::string& name) {
    if (name == "json") return CD_FORMAT_JSON;
    if (name == "csv") return CD_FORMAT_CSV;
    return CD_FORMAT_TEXT;
}

void warn_level(unsigned n) {
    if (n > kWarnLevel)
        std::cerr << "warning: level " << n << " means " << (1ULL << n) << "-dimensional elements; expect slow runs\n";
}

void print(const std::string& s) {
    std::cout << s;
    if (!s.empty() && s.back() != '\n') std::cout << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in the Cayley-Dickson algebras A_n"};
    app.require_subcommand(1);

    unsigned level = 4;
    std::string format;
    std::uint64_t seed = 0;
    std::size_t trials = 200;
    std::string theorem;
    std::vector<unsigned> levels;
    std::vector<std::string> operands;
    std::string kind = "h_a";
    std::string side = "L";
    bool no_elapsed = false;

    const std::vector<std::string> formats{"text", "json", "csv"};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", level, "Level n of A_n")->check(CLI::Range(0u, 30u));
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* table = app.add_subcommand("table", "Basis multiplication table of A_n");
    add_common(table);

    auto* eval = app.add_subcommand("eval", "Evaluate an expression, e.g. \"(e1+e10)*e15\"");
    add_common(eval);
    eval->add_option("expression", operands, "Expression")->required()->expected(1);

    auto* classify = app.add_subcommand("classify", "Alternative / strongly alternative status of an element");
    add_common(classify);
    classify->add_option("element", operands, "Element literal")->required()->expected(1);

    auto* sub = app.add_subcommand("subalgebra", "H_a, or the quaternion / octonion span of a and b");
    add_common(sub);
    sub->add_option("--kind", kind, "h_a, quaternion or octonion")
        ->check(CLI::IsMember({"h_a", "quaternion", "octonion"}));
    sub->add_option("elements", operands, "a [b]")->required()->expected(1, 2);

    auto* matrix = app.add_subcommand("matrix", "Left or right multiplication matrix as CSV");
    add_common(matrix);
    matrix->add_option("--side", side, "L or R")->check(CLI::IsMember({"L", "R"}));
    matrix->add_option("element", operands, "Element literal")->required()->expected(1);

    auto* verify = app.add_subcommand("verify", "Run the theorem checks");
    verify->add_option("--n", levels, "Levels, comma separated")->delimiter(',')->required();
    verify->add_option("--format", format, "json (report lines) or text (summary)")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--seed", seed, "Generator seed");
    verify->add_option("--trials", trials, "Sampled cases per theorem");
    verify->add_option("--theorem", theorem, "Run a single theorem id");
    verify->add_flag("--no-elapsed", no_elapsed, "Omit elapsed_ms from the output");

    auto* norm = app.add_subcommand("norm-violation", "First two-basis-sum pair with |xy| != |x||y|");
    add_common(norm);

    auto* theorems = app.add_subcommand("theorems", "List theorem ids");

    auto* replay = app.add_subcommand("replay", "Re-check a counterexample JSON payload");
    replay->add_option("payload", operands, "{\"claim\": ..., \"args\": [...]}")->required()->expected(1);

    CLI11_PARSE(app, argc, argv);

    try {
        char* out = nullptr;
        if (table->parsed()) {
            warn_level(level);
            check(cd_table(level, format_of(format), &out));
            print(take(out));
        } else if (eval->parsed()) {
            warn_level(level);
            cd_element* x = nullptr;
            check(cd_eval(level, operands[0].c_str(), &x));
            ElementPtr owned(x);
            check(format == "json" ? cd_element_to_json(x, &out) : cd_element_format(x, &out));
            print(take(out));
        } else if (classify->parsed()) {
            warn_level(level);
            const auto a = parse(level, operands[0]);
            check(cd_classify(a.get(), format.empty() ? CD_FORMAT_JSON : format_of(format), &out));
            print(take(out));
        } else if (sub->parsed()) {
            warn_level(level);
            const auto a = parse(level, operands[0]);
            ElementPtr b = operands.size() > 1 ? parse(level, operands[1]) : nullptr;
            const cd_subalgebra_kind k = kind == "quaternion" ? CD_SUBALGEBRA_QUATERNION
                                         : kind == "octonion" ? CD_SUBALGEBRA_OCTONION
                                                              : CD_SUBALGEBRA_H_A;
            if (k != CD_SUBALGEBRA_H_A && !b) {
                std::cerr << "error: --kind " << kind << " needs two elements\n";
                return 2;
            }
            check(cd_subalgebra(k, a.get(), b.get(), format.empty() ? CD_FORMAT_JSON : format_of(format), &out));
            print(take(out));
        } else if (matrix->parsed()) {
            warn_level(level);
            const auto a = parse(level, operands[0]);
            check(cd_matrix_csv(side[0], a.get(), &out));
            print(take(out));
        } else if (verify->parsed()) {
            for (unsigned l : levels) warn_level(l);
            int all_passed = 0;
            check(cd_verify(levels.data(), levels.size(), theorem.empty() ? nullptr : theorem.c_str(), seed, trials,
                            no_elapsed ? 0 : 1, format == "text" ? CD_FORMAT_TEXT : CD_FORMAT_JSON, &out,
                            &all_passed));
            print(take(out));
            return all_passed ? 0 : 1;
        } else if (norm->parsed()) {
            warn_level(level);
            check(cd_norm_violation(level, &out));
            const std::string json = take(out);
            print(json == "null" && format != "json" ? "none" : json);
        } else if (theorems->parsed()) {
            check(cd_theorem_ids(&out));
            print(take(out));
        } else if (replay->parsed()) {
            int fails = 0;
            check(cd_replay(operands[0].c_str(), &fails));
            print(fails ? "fails" : "holds");
            return fails ? 1 : 0;
        }
    } catch (const Failure& f) {
        std::cerr << "error (" << cd_status_name(f.status) << "): " << cd_last_error() << '\n';
        return 2;
    }
    return 0;
}
