#include "doctest.h"

#include <string>

#include "cdalg.h"

namespace {

struct Owned {
    cd_element* p = nullptr;
    ~Owned() { cd_element_free(p); }
};

std::string take(char* s) {
    std::string out(s);
    cd_string_free(s);
    return out;
}

std::string format(const cd_element* x) {
    char* s = nullptr;
    REQUIRE(cd_element_format(x, &s) == CD_OK);
    return take(s);
}

} // namespace

TEST_CASE("element lifecycle") {
    Owned x, y, p;
    REQUIRE(cd_element_parse(4, "e1 + e10", &x.p) == CD_OK);
    REQUIRE(cd_element_basis(4, 15, &y.p) == CD_OK);
    CHECK(cd_element_level(x.p) == 4);
    REQUIRE(cd_multiply(x.p, y.p, &p.p) == CD_OK);
    CHECK(format(p.p) == "e5 - e14");
    char* n = nullptr;
    REQUIRE(cd_norm_sq(p.p, &n) == CD_OK);
    CHECK(take(n) == "2");

    char* j = nullptr;
    REQUIRE(cd_element_to_json(x.p, &j) == CD_OK);
    const std::string json = take(j);
    CHECK(json.find("\"coeffs\":[\"0/1\",\"1/1\"") != std::string::npos);
    Owned back;
    REQUIRE(cd_element_from_json(json.c_str(), &back.p) == CD_OK);
    CHECK(cd_element_equal(back.p, x.p));
}

TEST_CASE("arithmetic") {
    Owned a, b, c, r, t, s, k, z;
    REQUIRE(cd_element_parse(4, "e4 + e15", &a.p) == CD_OK);
    REQUIRE(cd_element_parse(4, "e1", &b.p) == CD_OK);
    REQUIRE(cd_associator(a.p, a.p, b.p, &r.p) == CD_OK);
    CHECK(format(r.p) == "2*e10");
    REQUIRE(cd_tilde(b.p, &t.p) == CD_OK);
    CHECK(format(t.p) == "e9");
    REQUIRE(cd_conjugate(a.p, &c.p) == CD_OK);
    CHECK(format(c.p) == "-e4 - e15");
    REQUIRE(cd_add(a.p, c.p, &z.p) == CD_OK);
    CHECK(cd_element_is_zero(z.p));
    REQUIRE(cd_commutator(b.p, b.p, &k.p) == CD_OK);
    CHECK(cd_element_is_zero(k.p));
    REQUIRE(cd_eval(4, "(e1+e10)*e15", &s.p) == CD_OK);
    CHECK(format(s.p) == "e5 - e14");
}

TEST_CASE("status codes and messages") {
    Owned x, y, out;
    CHECK(cd_element_parse(4, "e1 +", &x.p) == CD_PARSE);
    CHECK(x.p == nullptr);
    CHECK(std::string(cd_last_error()).size() > 0);
    CHECK(cd_element_basis(3, 8, &x.p) == CD_OUT_OF_RANGE);
    REQUIRE(cd_element_parse(3, "e1", &x.p) == CD_OK);
    REQUIRE(cd_element_parse(4, "e1", &y.p) == CD_OK);
    CHECK(cd_multiply(x.p, y.p, &out.p) == CD_LEVEL_MISMATCH);
    CHECK(cd_multiply(nullptr, y.p, &out.p) == CD_INVALID_ARGUMENT);
    CHECK(std::string(cd_status_name(CD_HYPOTHESIS)) == "hypothesis");
    CHECK(cd_element_from_json("{", &out.p) == CD_PARSE);
    int fails = 0;
    CHECK(cd_replay("{\"claim\": \"nope\", \"args\": []}", &fails) == CD_UNKNOWN_THEOREM);
}

TEST_CASE("classification and structure") {
    Owned a, b, w;
    REQUIRE(cd_element_parse(4, "e8", &a.p) == CD_OK);
    char* s = nullptr;
    REQUIRE(cd_classify(a.p, CD_FORMAT_JSON, &s) == CD_OK);
    CHECK(take(s) == "{\"element\":\"e8\",\"level\":4,\"alternative\":true,\"strongly_alternative\":true}");

    Owned e1, e2, bad;
    REQUIRE(cd_element_parse(4, "e1", &e1.p) == CD_OK);
    REQUIRE(cd_element_parse(4, "e2", &e2.p) == CD_OK);
    int flag = -1;
    REQUIRE(cd_strongly_alternates_with(e1.p, e2.p, &flag) == CD_OK);
    CHECK(flag == 1);
    REQUIRE(cd_yui_witness(e1.p, e2.p, &w.p) == CD_OK);
    CHECK(w.p != nullptr);

    REQUIRE(cd_subalgebra(CD_SUBALGEBRA_OCTONION, e1.p, e2.p, CD_FORMAT_JSON, &s) == CD_OK);
    CHECK(take(s).find("\"closed\":true") != std::string::npos);
    REQUIRE(cd_element_parse(4, "e9", &bad.p) == CD_OK);
    CHECK(cd_subalgebra(CD_SUBALGEBRA_QUATERNION, e1.p, bad.p, CD_FORMAT_JSON, &s) == CD_HYPOTHESIS);
    CHECK(std::string(cd_last_error()).find("orthogonal complement") != std::string::npos);

    REQUIRE(cd_table(4, CD_FORMAT_CSV, &s) == CD_OK);
    const std::string csv = take(s);
    // row 1, column 5
    std::size_t pos = 0;
    for (int line = 0; line < 1; ++line) pos = csv.find('\n', pos) + 1;
    std::string row = csv.substr(pos, csv.find('\n', pos) - pos);
    for (int col = 0; col < 5; ++col) row = row.substr(row.find(',') + 1);
    CHECK(row.substr(0, row.find(',')) == "-e4");

    REQUIRE(cd_matrix_csv('L', e1.p, &s) == CD_OK);
    CHECK(take(s).rfind("0/1,-1/1,", 0) == 0);
    CHECK(cd_matrix_csv('X', e1.p, &s) == CD_INVALID_ARGUMENT);
}

TEST_CASE("verification entry points") {
    char* s = nullptr;
    REQUIRE(cd_theorem_ids(&s) == CD_OK);
    CHECK(take(s).rfind("lemma_1_1\n", 0) == 0);

    const unsigned levels[] = {4};
    int all = 0;
    REQUIRE(cd_verify(levels, 1, "flexibility", 5, 10, 0, CD_FORMAT_JSON, &s, &all) == CD_OK);
    CHECK(all == 1);
    const std::string line = take(s);
    CHECK(line.rfind("{\"theorem_id\":\"flexibility\",\"level\":4,\"seed\":5,", 0) == 0);
    CHECK(line.find("elapsed_ms") == std::string::npos);
    CHECK(cd_verify(levels, 1, "bogus", 5, 10, 0, CD_FORMAT_JSON, &s, &all) == CD_UNKNOWN_THEOREM);

    REQUIRE(cd_norm_violation(3, &s) == CD_OK);
    CHECK(take(s) == "null");
    REQUIRE(cd_norm_violation(4, &s) == CD_OK);
    CHECK(take(s).find("\"x\":\"e1 + e10\"") != std::string::npos);

    int fails = 0;
    const char* payload = R"({"claim":"normed","args":[)"
                          R"({"level":4,"coeffs":["0/1","1/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","1/1","0/1","0/1","0/1","0/1","0/1"]},)"
                          R"({"level":4,"coeffs":["0/1","0/1","0/1","0/1","1/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","1/1"]}]})";
    REQUIRE(cd_replay(payload, &fails) == CD_OK);
    CHECK(fails == 1);
}
