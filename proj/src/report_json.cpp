#include "singclass/report_json.hpp"

namespace singclass {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(j.get<std::string>());
}

json to_json(const YPolynomial& p) {
    json j = json::object();
    for (auto& [k, v] : p.coeffs()) j[std::to_string(k)] = v.str();
    return j;
}

YPolynomial ypoly_from_json(const json& j) {
    YPolynomial p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.set_coeff(std::stoi(it.key()), rational_from_json(it.value()));
    return p;
}

json to_json(const PowerSeries& s) {
    json coeffs = json::array();
    for (int k = 0; k < s.order(); ++k) coeffs.push_back(to_json(s.coeff(k)));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

PowerSeries series_from_json(const json& j) {
    int order = j.at("order").get<int>();
    PowerSeries s(order);
    const json& coeffs = j.at("coeffs");
    for (int k = 0; k < order && k < static_cast<int>(coeffs.size()); ++k)
        s.set_coeff(k, ypoly_from_json(coeffs.at(k)));
    return s;
}

json to_json(const CohomologyClass& c) {
    json arr = json::array();
    for (int k = 0; k <= c.ambient_dim(); ++k) arr.push_back(to_json(c.coeff(k)));
    return arr;
}

CohomologyClass class_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw UsageError("class JSON must be a nonempty array");
    CohomologyClass c(static_cast<int>(j.size()) - 1);
    for (int k = 0; k < static_cast<int>(j.size()); ++k)
        c.set_coeff(k, ypoly_from_json(j.at(k)));
    return c;
}

json to_json(const ConstructibleFunction& f) {
    json strata = json::array();
    for (auto& s : f.base().strata)
        strata.push_back(json{{"id", s.id}, {"chi_c", s.chi_c}, {"dim", s.dim}});
    json weights = json::object();
    for (auto& [id, w] : f.weights()) weights[id] = w;
    return json{{"strata", strata}, {"weights", weights}};
}

ConstructibleFunction constructible_from_json(const json& j) {
    Stratification st;
    for (const json& s : j.at("strata"))
        st.add({s.at("id").get<std::string>(), s.at("chi_c").get<long>(),
                s.at("dim").get<int>()});
    ConstructibleFunction f(std::move(st));
    const json& w = j.at("weights");
    for (auto it = w.begin(); it != w.end(); ++it) f.set_weight(it.key(), it.value().get<long>());
    return f;
}

json to_json(const LocalizedClass& c) {
    return json{{"class", to_json(c.cls)}, {"one_plus_y_exp", c.one_plus_y_exp}};
}

LocalizedClass localized_from_json(const json& j) {
    return LocalizedClass{class_from_json(j.at("class")), j.value("one_plus_y_exp", 0)};
}

json to_json(const ClassReport& r) {
    return json{{"kind", kind_name(r.kind)},
                {"virtual", to_json(r.virtual_cls)},
                {"milnor", to_json(r.milnor)},
                {"functorial", to_json(r.functorial)}};
}

ClassReport class_report_from_json(const json& j) {
    return ClassReport{kind_from_string(j.at("kind").get<std::string>()),
                       localized_from_json(j.at("virtual")),
                       localized_from_json(j.at("milnor")),
                       localized_from_json(j.at("functorial"))};
}

json to_json(const GeneraReport& r) {
    json j;
    j["euler"] = to_json(r.euler);
    j["chi_y"] = r.chi_y ? to_json(*r.chi_y) : json(nullptr);
    j["arithmetic_genus"] = to_json(r.arithmetic_genus);
    j["hodge_chi0"] = r.hodge_chi0 ? to_json(*r.hodge_chi0) : json(nullptr);
    j["chi_1"] = r.chi_1 ? to_json(*r.chi_1) : json(nullptr);
    j["l_degree"] = r.l_degree ? to_json(*r.l_degree) : json(nullptr);
    return j;
}

GeneraReport genera_from_json(const json& j) {
    GeneraReport r{};
    r.euler = rational_from_json(j.at("euler"));
    if (!j.at("chi_y").is_null()) r.chi_y = ypoly_from_json(j.at("chi_y"));
    r.arithmetic_genus = rational_from_json(j.at("arithmetic_genus"));
    if (!j.at("hodge_chi0").is_null()) r.hodge_chi0 = rational_from_json(j.at("hodge_chi0"));
    if (!j.at("chi_1").is_null()) r.chi_1 = rational_from_json(j.at("chi_1"));
    if (!j.at("l_degree").is_null()) r.l_degree = rational_from_json(j.at("l_degree"));
    return r;
}

json to_json(const VerifyReport& r) {
    json checks = json::array();
    for (auto& c : r.checks)
        checks.push_back(
            json{{"id", c.id}, {"status", status_name(c.status)}, {"detail", c.detail}});
    return json{{"scene", r.scene}, {"passed", r.passed()}, {"checks", checks}};
}

VerifyReport verify_from_json(const json& j) {
    VerifyReport r;
    r.scene = j.value("scene", "");
    for (const json& c : j.at("checks")) {
        std::string st = c.at("status").get<std::string>();
        CheckStatus status = st == "pass"     ? CheckStatus::pass
                             : st == "fail"   ? CheckStatus::fail
                             : st == "skipped" ? CheckStatus::skipped
                                               : throw UsageError("bad check status '" + st + "'");
        r.checks.push_back({c.at("id").get<std::string>(), status, c.value("detail", "")});
    }
    return r;
}

} // namespace singclass
