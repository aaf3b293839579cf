#include <doctest.h>

#include "singclass/report_json.hpp"

using namespace singclass;
using nlohmann::json;

namespace {

json cayley_json() {
    return json::parse(R"({
      "version": 1,
      "ambient": {"type": "projective_space", "dim": 3},
      "degrees": [3],
      "singularities": [
        {"weights": ["1/2", "1/2", "1/2"], "label": "A1", "count": 4, "qhm": true}
      ],
      "options": {"kinds": ["chern", "hirzebruch"]}
    })");
}

} // namespace

TEST_CASE("scene parsing") {
    Scene s = Scene::from_json(cayley_json(), true);
    CHECK(s.ambient_dim == 3);
    CHECK(s.degrees == std::vector<int>{3});
    CHECK(s.mode == SceneMode::hypersurface);
    REQUIRE(s.points.size() == 1);
    CHECK(s.points[0].count == 4);
    CHECK(s.points[0].qhm);
    CHECK(s.points[0].germ.mu() == 1);
    CHECK(s.options.kinds.size() == 2);
    CHECK(s.series_order() == 4);
}

TEST_CASE("scene round trip") {
    Scene s = Scene::from_json(cayley_json(), true);
    Scene back = Scene::from_json(s.to_json(), true);
    CHECK(back.ambient_dim == s.ambient_dim);
    CHECK(back.degrees == s.degrees);
    CHECK(back.mode == s.mode);
    CHECK(back.points.size() == s.points.size());
    CHECK(back.points[0].germ.weights() == s.points[0].germ.weights());
    CHECK(back.to_json() == s.to_json());
}

TEST_CASE("strict mode rejects unknown fields") {
    json j = cayley_json();
    j["frobnicate"] = 1;
    CHECK_THROWS_AS(Scene::from_json(j, true), UsageError);
    CHECK_NOTHROW(Scene::from_json(j, false));

    json j2 = cayley_json();
    j2["singularities"][0]["mu"] = 99;
    CHECK_THROWS_AS(Scene::from_json(j2, true), UsageError);
}

TEST_CASE("schema violations") {
    json j = cayley_json();
    j.erase("ambient");
    CHECK_THROWS_AS(Scene::from_json(j), UsageError);

    json j2 = cayley_json();
    j2["mode"] = "complete_intersection";   // one degree: wrong mode
    CHECK_THROWS_AS(Scene::from_json(j2), UsageError);

    json j3 = cayley_json();
    j3["singularities"][0]["weights"] = {"1/2", "1/2"};   // wrong germ dimension
    CHECK_THROWS_AS(Scene::from_json(j3), UsageError);

    json j4 = cayley_json();
    j4["singularities"][0]["weights"] = {"1/2", "2/5", "1/2"};   // non-integer mu
    CHECK_THROWS_AS(Scene::from_json(j4), DomainError);
}

TEST_CASE("ci options parse") {
    json j = json::parse(R"({
      "ambient": {"type": "projective_space", "dim": 3},
      "degrees": [2, 2],
      "options": {"user_ci_local_data": {"points": [{"chi_tilde": -1}],
                                         "declared_euler": 1}}
    })");
    Scene s = Scene::from_json(j, true);
    CHECK(s.mode == SceneMode::complete_intersection);
    REQUIRE(s.options.ci_local.size() == 1);
    CHECK(s.options.ci_local[0].chi_tilde == -1);
    CHECK(s.options.ci_local[0].count == 1);
    CHECK(s.options.declared_euler == 1);
}

TEST_CASE("report JSON round trips") {
    Scene s = Scene::from_json(cayley_json(), true);

    ClassReport cr = functorial_class(GenusKind::hirzebruch, s);
    ClassReport cr2 = class_report_from_json(to_json(cr));
    CHECK(cr2.kind == cr.kind);
    CHECK(cr2.virtual_cls.cls == cr.virtual_cls.cls);
    CHECK(cr2.milnor.cls == cr.milnor.cls);
    CHECK(cr2.functorial.cls == cr.functorial.cls);
    CHECK(to_json(cr2) == to_json(cr));

    ClassReport lam = functorial_class(GenusKind::lambda_dual, s);
    CHECK(to_json(class_report_from_json(to_json(lam))) == to_json(lam));

    GeneraReport g = genera_report(s);
    CHECK(to_json(genera_from_json(to_json(g))) == to_json(g));

    VerifyReport v = verify_scene(s);
    CHECK(to_json(verify_from_json(to_json(v))) == to_json(v));

    ConstructibleFunction psi = psi_scene(s);
    ConstructibleFunction psi2 = constructible_from_json(to_json(psi));
    CHECK(psi2 == psi);
    CHECK(to_json(psi2) == to_json(psi));

    // series and y-polynomials
    PowerSeries q = builtin_genus(GenusKind::hirzebruch, 9).series;
    CHECK(series_from_json(to_json(q)) == q);
    YPolynomial p;
    p.set_coeff(-2, Rational(3, 7));
    p.set_coeff(5, Rational(-1, 3));
    CHECK(ypoly_from_json(to_json(p)) == p);
}

TEST_CASE("rationals serialize as exact strings") {
    CHECK(to_json(Rational(-22, 8)) == json("-11/4"));
    CHECK(rational_from_json(json("-11/4")) == Rational(-11, 4));
    CHECK(to_json(Rational(5)) == json("5"));
}
