#include "singclass/scene.hpp"

#include <fstream>
#include <set>

namespace singclass {

using nlohmann::json;

const char* mode_name(SceneMode m) {
    switch (m) {
        case SceneMode::ambient: return "ambient";
        case SceneMode::hypersurface: return "hypersurface";
        case SceneMode::complete_intersection: return "complete_intersection";
    }
    return "?";
}

bool Scene::all_qhm() const {
    for (auto& p : points)
        if (!p.qhm) return false;
    return true;
}

bool Scene::all_du_bois() const {
    for (auto& p : points)
        if (!p.germ.du_bois()) return false;
    return true;
}

int Scene::series_order() const {
    int base = ambient_dim + 1;
    if (options.order && *options.order > base) return *options.order;
    return base;
}

void Scene::validate() const {
    if (ambient_dim < 1) throw UsageError("ambient dimension must be >= 1");
    if (codim() > ambient_dim) throw UsageError("codimension exceeds ambient dimension");
    for (int d : degrees)
        if (d < 1) throw UsageError("degrees must be >= 1");
    switch (mode) {
        case SceneMode::ambient:
            if (!degrees.empty()) throw UsageError("ambient scene cannot carry degrees");
            break;
        case SceneMode::hypersurface:
            if (codim() != 1) throw UsageError("hypersurface scene needs exactly one degree");
            break;
        case SceneMode::complete_intersection:
            if (codim() < 2)
                throw UsageError("complete-intersection mode needs at least two degrees "
                                 "(use hypersurface mode for one)");
            break;
    }
    if (!points.empty() && mode == SceneMode::ambient)
        throw UsageError("ambient P^n has no singular points");
    for (auto& p : points) {
        if (p.count < 1) throw UsageError("singular point count must be >= 1");
        if (p.germ.fiber_dim() != dim())
            throw UsageError("germ dimension " + std::to_string(p.germ.fiber_dim()) +
                             " does not match the scene dimension " + std::to_string(dim()));
    }
    for (auto& c : options.ci_local)
        if (c.count < 1) throw UsageError("ci_local count must be >= 1");
}

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, bool strict,
                const std::string& where) {
    if (!strict) return;
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw UsageError("unknown field '" + it.key() + "' in " + where);
}

Rational parse_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw UsageError("expected rational string in " + where);
}

SceneMode parse_mode(const std::string& s) {
    if (s == "ambient") return SceneMode::ambient;
    if (s == "hypersurface") return SceneMode::hypersurface;
    if (s == "complete_intersection") return SceneMode::complete_intersection;
    throw UsageError("unknown scene mode '" + s + "'");
}

} // namespace

Scene Scene::from_json(const json& j, bool strict) {
    if (!j.is_object()) throw UsageError("scene must be a JSON object");
    check_keys(j, {"version", "ambient", "degrees", "singularities", "mode", "options", "name"},
               strict, "scene");
    Scene s;
    if (j.contains("version") && j.at("version").get<int>() != 1)
        throw UsageError("unsupported scene version");
    if (!j.contains("ambient")) throw UsageError("scene needs an 'ambient' block");
    const json& amb = j.at("ambient");
    check_keys(amb, {"type", "dim"}, strict, "ambient");
    if (amb.value("type", "projective_space") != "projective_space")
        throw UsageError("only ambient type 'projective_space' is supported");
    s.ambient_dim = amb.at("dim").get<int>();
    if (j.contains("degrees")) s.degrees = j.at("degrees").get<std::vector<int>>();
    if (j.contains("name")) s.name = j.at("name").get<std::string>();

    if (j.contains("singularities")) {
        for (const json& g : j.at("singularities")) {
            check_keys(g, {"weights", "label", "count", "qhm"}, strict, "singularity");
            if (!g.contains("weights")) throw UsageError("singularity needs 'weights'");
            std::vector<Rational> w;
            for (const json& wj : g.at("weights")) w.push_back(parse_rational(wj, "weights"));
            SingularPoint p{SingularityGerm::from_weights(std::move(w), g.value("label", "")),
                            g.value("count", 1L), g.value("qhm", false)};
            s.points.push_back(std::move(p));
        }
    }

    if (j.contains("mode"))
        s.mode = parse_mode(j.at("mode").get<std::string>());
    else
        s.mode = s.degrees.empty()            ? SceneMode::ambient
                 : s.degrees.size() == 1      ? SceneMode::hypersurface
                                              : SceneMode::complete_intersection;

    if (j.contains("options")) {
        const json& o = j.at("options");
        check_keys(o,
                   {"order", "kinds", "user_sigma", "user_ci_local_data",
                    "expected_du_bois_discrepancy"},
                   strict, "options");
        if (o.contains("order")) s.options.order = o.at("order").get<int>();
        if (o.contains("kinds"))
            for (const json& k : o.at("kinds"))
                s.options.kinds.push_back(kind_from_string(k.get<std::string>()));
        if (o.contains("user_sigma"))
            for (auto it = o.at("user_sigma").begin(); it != o.at("user_sigma").end(); ++it)
                s.options.user_sigma[it.key()] = it.value().get<long>();
        if (o.contains("user_ci_local_data")) {
            const json& ci = o.at("user_ci_local_data");
            check_keys(ci, {"points", "declared_euler"}, strict, "user_ci_local_data");
            if (ci.contains("points"))
                for (const json& p : ci.at("points")) {
                    check_keys(p, {"chi_tilde", "count"}, strict, "ci point");
                    s.options.ci_local.push_back(
                        {p.at("chi_tilde").get<long>(), p.value("count", 1L)});
                }
            if (ci.contains("declared_euler"))
                s.options.declared_euler = ci.at("declared_euler").get<long>();
        }
        if (o.contains("expected_du_bois_discrepancy"))
            s.options.expected_du_bois_discrepancy =
                o.at("expected_du_bois_discrepancy").get<long>();
    }

    s.validate();
    return s;
}

Scene Scene::load_file(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open scene file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("bad JSON in '" + path + "': " + e.what());
    }
    Scene s = from_json(j, strict);
    if (s.name.empty()) s.name = path;
    return s;
}

json Scene::to_json() const {
    json j;
    j["version"] = 1;
    j["ambient"] = {{"type", "projective_space"}, {"dim", ambient_dim}};
    j["degrees"] = degrees;
    j["mode"] = mode_name(mode);
    if (!name.empty()) j["name"] = name;
    json sing = json::array();
    for (auto& p : points) {
        json g;
        json w = json::array();
        for (auto& wi : p.germ.weights()) w.push_back(wi.str());
        g["weights"] = w;
        if (!p.germ.label().empty()) g["label"] = p.germ.label();
        g["count"] = p.count;
        g["qhm"] = p.qhm;
        sing.push_back(g);
    }
    j["singularities"] = sing;
    json o = json::object();
    if (options.order) o["order"] = *options.order;
    if (!options.kinds.empty()) {
        json ks = json::array();
        for (auto k : options.kinds) ks.push_back(kind_name(k));
        o["kinds"] = ks;
    }
    if (!options.user_sigma.empty()) {
        json us = json::object();
        for (auto& [label, sig] : options.user_sigma) us[label] = sig;
        o["user_sigma"] = us;
    }
    if (!options.ci_local.empty() || options.declared_euler) {
        json ci = json::object();
        json pts = json::array();
        for (auto& c : options.ci_local)
            pts.push_back({{"chi_tilde", c.chi_tilde}, {"count", c.count}});
        ci["points"] = pts;
        if (options.declared_euler) ci["declared_euler"] = *options.declared_euler;
        o["user_ci_local_data"] = ci;
    }
    if (options.expected_du_bois_discrepancy)
        o["expected_du_bois_discrepancy"] = *options.expected_du_bois_discrepancy;
    if (!o.empty()) j["options"] = o;
    return j;
}

} // namespace singclass
