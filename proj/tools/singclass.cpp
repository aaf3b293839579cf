#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "singclass/report_json.hpp"

namespace fs = std::filesystem;
using namespace singclass;
using nlohmann::json;

namespace {

std::optional<int> env_order() {
    const char* v = std::getenv("SINGCLASS_ORDER");
    if (!v || !*v) return std::nullopt;
    try {
        int n = std::stoi(v);
        if (n < 1) throw UsageError("SINGCLASS_ORDER must be >= 1");
        return n;
    } catch (const std::exception&) {
        throw UsageError("bad SINGCLASS_ORDER value");
    }
}

struct SeriesArgs {
    std::string kind;
    int order = 0;           // 0: default (env or 8)
    std::string y_value;     // empty: keep y symbolic
    bool as_json = false;
};

int cmd_series(const SeriesArgs& a) {
    int order = a.order > 0 ? a.order : env_order().value_or(8);
    GenusSpec spec = builtin_genus(kind_from_string(a.kind), order);
    PowerSeries s = spec.series;
    if (!a.y_value.empty()) s = s.subst_y(Rational::parse(a.y_value));
    if (a.as_json) {
        json j;
        j["kind"] = a.kind;
        if (!a.y_value.empty()) j["y"] = Rational::parse(a.y_value).str();
        j["series"] = to_json(s);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << s.str() << "\n";
    }
    return 0;
}

struct SceneArgs {
    std::string path;
    std::string kind;
    std::string report = "class";
    int order = 0;
    bool as_json = false;
    bool strict = false;
};

Scene load_scene(const std::string& path, bool strict, int order_flag) {
    Scene s = Scene::load_file(path, strict);
    if (order_flag > 0)
        s.options.order = order_flag;
    else if (!s.options.order)
        s.options.order = env_order();
    s.validate();
    return s;
}

void print_class_table(const ClassReport& r) {
    int n = r.virtual_cls.cls.ambient_dim();
    std::cout << "kind: " << kind_name(r.kind);
    if (r.virtual_cls.one_plus_y_exp || r.functorial.one_plus_y_exp)
        std::cout << "  (entries divided by the indicated power of (1+y))";
    std::cout << "\n\n";
    std::cout << "| class | (1+y)-exp |";
    for (int k = 0; k <= n; ++k) std::cout << " h^" << k << " |";
    std::cout << "\n|---|---|";
    for (int k = 0; k <= n; ++k) std::cout << "---|";
    std::cout << "\n";
    auto row = [&](const char* name, const LocalizedClass& c) {
        std::cout << "| " << name << " | " << c.one_plus_y_exp << " |";
        for (int k = 0; k <= n; ++k) std::cout << " " << c.cls.coeff(k).str() << " |";
        std::cout << "\n";
    };
    row("virtual", r.virtual_cls);
    row("milnor", r.milnor);
    row("functorial", r.functorial);
}

void print_genera_table(const GeneraReport& g) {
    auto opt = [](const std::optional<Rational>& v) { return v ? v->str() : "-"; };
    std::cout << "| quantity | value |\n|---|---|\n";
    std::cout << "| e(X) | " << g.euler.str() << " |\n";
    std::cout << "| chi_y(X) | " << (g.chi_y ? g.chi_y->str() : "-") << " |\n";
    std::cout << "| arithmetic genus | " << g.arithmetic_genus.str() << " |\n";
    std::cout << "| hodge chi_0 | " << opt(g.hodge_chi0) << " |\n";
    std::cout << "| chi_1 | " << opt(g.chi_1) << " |\n";
    std::cout << "| L-degree | " << opt(g.l_degree) << " |\n";
}

int cmd_scene(const SceneArgs& a) {
    Scene s = load_scene(a.path, a.strict, a.order);
    if (a.report == "cycles") {
        ConstructibleFunction one = one_scene(s);
        ConstructibleFunction psi = psi_scene(s);
        ConstructibleFunction phi = phi_scene(s);
        if (a.as_json) {
            json j{{"scene", s.name},
                   {"one", to_json(one)},
                   {"psi", to_json(psi)},
                   {"phi", to_json(phi)},
                   {"euler_integral_psi", euler_integral(psi)},
                   {"euler_integral_one", euler_integral(one)}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "| stratum | chi_c | dim | 1_X | psi | phi |\n|---|---|---|---|---|---|\n";
            for (auto& st : one.base().strata)
                std::cout << "| " << st.id << " | " << st.chi_c << " | " << st.dim << " | "
                          << one.weight(st.id) << " | " << psi.weight(st.id) << " | "
                          << phi.weight(st.id) << " |\n";
            std::cout << "integral(psi) = " << euler_integral(psi)
                      << ", integral(1_X) = " << euler_integral(one) << "\n";
        }
        return 0;
    }
    if (a.report == "genera") {
        GeneraReport g = genera_report(s);
        if (a.as_json) {
            json j{{"scene", s.name}, {"genera", to_json(g)}};
            std::cout << j.dump(2) << "\n";
        } else {
            print_genera_table(g);
        }
        return 0;
    }
    if (a.report != "class")
        throw UsageError("--report must be 'class', 'genera' or 'cycles'");
    std::vector<GenusKind> kinds;
    if (!a.kind.empty())
        kinds.push_back(kind_from_string(a.kind));
    else if (!s.options.kinds.empty())
        kinds = s.options.kinds;
    else
        kinds.push_back(GenusKind::chern);
    json reports = json::array();
    for (size_t i = 0; i < kinds.size(); ++i) {
        ClassReport r = functorial_class(kinds[i], s);
        if (a.as_json)
            reports.push_back(to_json(r));
        else
            print_class_table(r);
        if (!a.as_json && i + 1 < kinds.size()) std::cout << "\n";
    }
    if (a.as_json) {
        json j{{"scene", s.name}, {"reports", reports}};
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> paths;
    bool as_json = false;
    bool strict = false;
    int order = 0;
};

std::vector<std::string> collect_scene_files(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (auto& p : paths) {
        if (fs::is_directory(p)) {
            for (auto& e : fs::directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".json")
                    files.push_back(e.path().string());
        } else {
            files.push_back(p);
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

int cmd_verify(const VerifyArgs& a) {
    std::vector<std::string> files = collect_scene_files(a.paths);
    if (files.empty()) throw UsageError("no scene files to verify");

    struct Outcome {
        VerifyReport report;
        std::string error;
    };
    std::vector<Outcome> outcomes(files.size());
    // Scenes are independent; order of the printed report stays the sorted
    // path order regardless of which thread finished first.
    const int count = static_cast<int>(files.size());
#ifdef _OPENMP
    #pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < count; ++i) {
        try {
            Scene s = load_scene(files[i], a.strict, a.order);
            outcomes[i].report = verify_scene(s);
        } catch (const std::exception& e) {
            outcomes[i].error = e.what();
            outcomes[i].report.scene = files[i];
        }
    }

    bool any_fail = false;
    bool any_error = false;
    json out = json::array();
    for (size_t i = 0; i < outcomes.size(); ++i) {
        const Outcome& o = outcomes[i];
        if (!o.error.empty()) {
            any_error = true;
            if (a.as_json)
                out.push_back(json{{"scene", files[i]}, {"error", o.error}});
            else
                std::cout << files[i] << ": ERROR " << o.error << "\n";
            continue;
        }
        any_fail = any_fail || !o.report.passed();
        if (a.as_json) {
            json r = to_json(o.report);
            r["path"] = files[i];
            out.push_back(r);
        } else {
            std::cout << files[i] << ": " << (o.report.passed() ? "PASS" : "FAIL") << "\n";
            for (auto& c : o.report.checks) {
                std::cout << "  [" << status_name(c.status) << "] " << c.id;
                if (!c.detail.empty()) std::cout << " -- " << c.detail;
                std::cout << "\n";
            }
        }
    }
    if (a.as_json) std::cout << out.dump(2) << "\n";
    if (any_error) return 3;
    return any_fail ? 1 : 0;
}

int cmd_catalog(bool as_json) {
    json out = json::array();
    for (auto& e : germ_catalog()) {
        const SingularityGerm& g = e.germ;
        json spec = json::object();
        for (auto& [b, m] : g.spectrum().mult) spec[b.str()] = m;
        json jw = json::array();
        for (auto& w : g.weights()) jw.push_back(w.str());
        json j{{"name", e.name},
               {"weights", jw},
               {"dim", g.fiber_dim()},
               {"mu", g.mu().get_str()},
               {"spectrum", spec},
               {"chi_y_reduced", to_json(g.chi_y_reduced_fiber())},
               {"du_bois", g.du_bois()},
               {"qhm", e.qhm_default}};
        if (g.fiber_dim() % 2 == 0) j["signature"] = g.signature_fiber();
        out.push_back(j);
        if (!as_json) {
            std::cout << e.name << ": weights (";
            for (size_t i = 0; i < g.weights().size(); ++i)
                std::cout << (i ? "," : "") << g.weights()[i].str();
            std::cout << "), dim " << g.fiber_dim() << ", mu " << g.mu().get_str()
                      << ", spectrum {";
            bool first = true;
            for (auto& [b, m] : g.spectrum().mult) {
                std::cout << (first ? "" : ", ") << b.str();
                if (m > 1) std::cout << "x" << m;
                first = false;
            }
            std::cout << "}, chi_y~ " << g.chi_y_reduced_fiber().str()
                      << (g.du_bois() ? ", Du Bois" : "");
            if (g.fiber_dim() % 2 == 0) std::cout << ", sigma " << g.signature_fiber();
            std::cout << "\n";
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic classes and genera of (possibly singular) "
                 "complete intersections in P^n"};
    app.require_subcommand(1);

    SeriesArgs series_args;
    CLI::App* series = app.add_subcommand("series", "print a genus power series");
    series->add_option("kind", series_args.kind,
                       "chern|todd|lclass|hirzebruch|lambda")->required();
    series->add_option("--order", series_args.order, "truncation order");
    series->add_option("--y", series_args.y_value, "substitute a rational value for y");
    series->add_flag("--json", series_args.as_json, "emit JSON");

    SceneArgs scene_args;
    CLI::App* scene = app.add_subcommand("scene", "evaluate a scene file");
    scene->add_option("path", scene_args.path, "scene JSON file")->required();
    scene->add_option("--kind", scene_args.kind, "genus kind (default chern)");
    scene->add_option("--report", scene_args.report, "class|genera|cycles");
    scene->add_option("--order", scene_args.order, "series truncation override");
    scene->add_flag("--json", scene_args.as_json, "emit JSON");
    scene->add_flag("--strict", scene_args.strict, "reject unknown scene fields");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suite on scenes");
    verify->add_option("paths", verify_args.paths, "scene files or directories")->required();
    verify->add_flag("--json", verify_args.as_json, "emit JSON");
    verify->add_flag("--strict", verify_args.strict, "reject unknown scene fields");
    verify->add_option("--order", verify_args.order, "series truncation override");

    bool catalog_json = false;
    CLI::App* catalog = app.add_subcommand("catalog", "list bundled germs");
    catalog->add_flag("--json", catalog_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(series)) return cmd_series(series_args);
        if (app.got_subcommand(scene)) return cmd_scene(scene_args);
        if (app.got_subcommand(verify)) return cmd_verify(verify_args);
        if (app.got_subcommand(catalog)) return cmd_catalog(catalog_json);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
