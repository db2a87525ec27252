#include "klb2/json.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace klb2 {

namespace {

Json coeff_json(const Integer& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

Integer coeff_from_json(const Json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long long>());
}

// integer comparisons are reported as numbers, anything else verbatim
Json side_json(const std::optional<LaurentPoly>& poly, const std::string& text) {
    if (poly) return to_json(*poly);
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    return text;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& t : p.terms()) j[std::to_string(t.exp)] = coeff_json(t.coeff);
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (const auto& [k, c] : j.items()) p += LaurentPoly::monomial(std::stoi(k), coeff_from_json(c));
    return p;
}

Json to_json(const Element& w) { return Json{{"word", word_str(canonical_word(w))}}; }

Json to_json(const HeckeElem& X) {
    Json terms = Json::array();
    for (const auto& w : X.support())
        terms.push_back(Json{{"word", word_str(canonical_word(w))}, {"poly", to_json(X.coeff(w))}});
    return Json{{"terms", terms}};
}

HeckeElem hecke_from_json(const Json& j) {
    HeckeElem X;
    for (const auto& t : j.at("terms"))
        X.add_term(elt(t.at("word").get<std::string>()), laurent_from_json(t.at("poly")));
    return X;
}

Json to_json(const FamilyTag& tag) {
    return Json{{"region", region_name(tag.region)},
                {"family", family_name(tag.family)},
                {"m", tag.m},
                {"n", tag.n},
                {"x", prefix_name(tag.xk)},
                {"y", suffix_name(tag.yk)},
                {"primed", tag.primed}};
}

Json to_json(const VerifyRecord& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    Json j{{"identity", r.identity}, {"params", params}, {"status", r.ok ? "ok" : "fail"}};
    if (r.ok) {
        j["first_diff"] = nullptr;
    } else {
        j["first_diff"] = Json{{"element", r.diff_element.value_or("")},
                               {"lhs", side_json(r.lhs_poly, r.lhs)},
                               {"rhs", side_json(r.rhs_poly, r.rhs)}};
    }
    return j;
}

Json to_json(const VerifyReport& r) {
    Json records = Json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    return Json{{"suite", r.suite},
                {"max_len", r.max_len},
                {"checked", r.records.size()},
                {"failures", r.failures()},
                {"status", r.ok() ? "ok" : "fail"},
                {"records", records}};
}

}  // namespace klb2
