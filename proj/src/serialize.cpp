#include "cdalg/serialize.hpp"

#include "cdalg/error.hpp"
#include "cdalg/literal.hpp"

namespace cdalg {

Json to_json(const Element& x) {
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.fraction_str());
    return Json{{"level", x.level()}, {"coeffs", std::move(coeffs)}};
}

Element element_from_json(const Json& j) {
    try {
        const auto level = j.at("level").get<unsigned>();
        const Json& coeffs = j.at("coeffs");
        if (!coeffs.is_array()) fail(ErrorCode::parse, "coeffs must be an array");
        std::vector<Rational> values;
        values.reserve(coeffs.size());
        for (const auto& c : coeffs) values.push_back(Rational::parse(c.get<std::string>()));
        return Element(level, std::move(values));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse, std::string("bad element JSON: ") + e.what());
    }
}

Json to_json(const Element& a, const AltStatus& status) {
    Json j{{"element", format_element(a)},
           {"level", a.level()},
           {"alternative", status.alternative},
           {"strongly_alternative", status.strongly_alternative}};
    if (status.witness) {
        j["witness"] = format_element(*status.witness);
        j["witness_kind"] = status.witness_kind == WitnessKind::left_alternative ? "left_alternative" : "middle_square";
    }
    return j;
}

Json to_json(const SubalgebraBasis& basis) {
    Json elements = Json::array();
    for (const auto& e : basis.elements) elements.push_back(format_element(e));
    Json table = Json::array();
    for (const auto& row : basis.table) {
        Json r = Json::array();
        for (const auto& cell : row) {
            if (!cell) {
                r.push_back(nullptr);
                continue;
            }
            Json coords = Json::array();
            for (const auto& c : *cell) coords.push_back(c.fraction_str());
            r.push_back(std::move(coords));
        }
        table.push_back(std::move(r));
    }
    return Json{{"level", basis.level},
                {"elements", std::move(elements)},
                {"labels", basis.labels},
                {"table", std::move(table)},
                {"closed", basis.closed}};
}

} // namespace cdalg
