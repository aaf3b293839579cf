#include "singclass/engine.hpp"

#include <sstream>

namespace singclass {

BundleClass t_vir(const Scene& s) {
    s.validate();
    BundleClass b(s.ambient_dim);
    b.twists = tvir_twists(s.ambient_dim, s.degrees);
    return b;
}

LocalizedClass virtual_class_localized(GenusKind kind, const Scene& s) {
    GenusSpec spec = builtin_genus(kind, s.series_order());
    LocalizedClass g = genus_of_bundle_localized(spec, t_vir(s));
    g.cls = g.cls * fundamental_class(s.ambient_dim, s.degrees);
    g.normalize();
    return g;
}

CohomologyClass virtual_class(GenusKind kind, const Scene& s) {
    return virtual_class_localized(kind, s).demand_plain();
}

YPolynomial virtual_genus(GenusKind kind, const Scene& s) {
    return virtual_class(kind, s).degree();
}

namespace {

bool has_ci_data(const Scene& s) {
    return s.mode == SceneMode::complete_intersection && !s.options.ci_local.empty();
}

long sum_ci_chi_tilde(const Scene& s) {
    long acc = 0;
    for (auto& c : s.options.ci_local) acc += c.chi_tilde * c.count;
    return acc;
}

/* Per-point local term of the Milnor class for the given kind. */
YPolynomial local_milnor_term(GenusKind kind, const Scene& s, const SingularPoint& p) {
    int n = s.dim();
    switch (kind) {
        case GenusKind::chern:
            return YPolynomial(Rational((n % 2 == 0 ? 1 : -1) * p.germ.mu_long()));
        case GenusKind::hirzebruch:
        case GenusKind::lambda_dual:
            return p.germ.chi_y_reduced_fiber();
        case GenusKind::todd:
            return YPolynomial(p.germ.chi_y_reduced_fiber().eval(Rational(0)));
        case GenusKind::lclass: {
            if (n % 2 == 0) return YPolynomial(Rational(p.germ.signature_fiber()));
            auto it = s.options.user_sigma.find(p.germ.label());
            if (it == s.options.user_sigma.end())
                throw DomainError("L-kind Milnor class needs a Milnor-fiber signature; "
                                  "dim X is odd and no user_sigma entry for '" +
                                  p.germ.label() + "'");
            return YPolynomial(Rational(it->second));
        }
    }
    throw UsageError("unknown genus kind");
}

} // namespace

CohomologyClass milnor_class(GenusKind kind, const Scene& s) {
    s.validate();
    int n = s.ambient_dim;
    if (has_ci_data(s)) {
        if (kind != GenusKind::chern)
            throw DomainError("complete-intersection scenes carry degree-level (chern) "
                              "local data only");
        return CohomologyClass::monomial(n, n, YPolynomial(Rational(sum_ci_chi_tilde(s))));
    }
    if (!s.points.empty() && s.mode != SceneMode::hypersurface)
        throw DomainError("Milnor classes of singular complete intersections need "
                          "user-supplied local data");
    YPolynomial total;
    for (auto& p : s.points) total += Rational(p.count) * local_milnor_term(kind, s, p);
    return CohomologyClass::monomial(n, n, total);
}

ClassReport functorial_class(GenusKind kind, const Scene& s) {
    ClassReport r{kind,
                  virtual_class_localized(kind, s),
                  LocalizedClass{milnor_class(kind, s), 0},
                  LocalizedClass{CohomologyClass::zero(s.ambient_dim), 0}};
    // Align ledgers before subtracting; only the lambda kind can be nonzero.
    int e = r.virtual_cls.one_plus_y_exp;
    YPolynomial scale = YPolynomial::one_plus_y().pow(e);
    r.functorial = LocalizedClass{r.virtual_cls.cls - scale * r.milnor.cls, e};
    r.functorial.normalize();
    return r;
}

GeneraReport genera_report(const Scene& s) {
    GeneraReport g{};
    ClassReport chern = functorial_class(GenusKind::chern, s);
    g.euler = chern.functorial.cls.degree().constant_coeff();
    g.arithmetic_genus = virtual_genus(GenusKind::hirzebruch, s).eval(Rational(0));
    if (!has_ci_data(s)) {
        YPolynomial chi_y = functorial_class(GenusKind::hirzebruch, s).functorial.cls.degree();
        g.chi_y = chi_y;
        g.hodge_chi0 = chi_y.eval(Rational(0));
        g.chi_1 = chi_y.eval(Rational(1));
        bool sigma_ok = s.dim() % 2 == 0;
        if (!sigma_ok) {
            sigma_ok = true;
            for (auto& p : s.points)
                sigma_ok = sigma_ok && s.options.user_sigma.count(p.germ.label());
        }
        if (sigma_ok)
            g.l_degree = functorial_class(GenusKind::lclass, s).functorial.cls.degree()
                             .constant_coeff();
    }
    return g;
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool VerifyReport::passed() const {
    for (auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

namespace {

constexpr GenusKind kAllKinds[] = {GenusKind::chern, GenusKind::todd, GenusKind::lclass,
                                   GenusKind::hirzebruch, GenusKind::lambda_dual};

void check_gysin_twist(const Scene& s, VerifyReport& out) {
    for (GenusKind kind : kAllKinds) {
        GenusSpec spec = builtin_genus(kind, s.series_order());
        int n = s.ambient_dim;
        BundleClass normal(n);
        for (int d : s.degrees) normal.add_twist(d, 1);
        BundleClass ambient_tangent(n);
        ambient_tangent.twists = tvir_twists(n, {});

        LocalizedClass lhs = virtual_class_localized(kind, s);
        lhs.cls = genus_of_bundle(spec, normal) * lhs.cls;

        LocalizedClass rhs = genus_of_bundle_localized(spec, ambient_tangent);
        rhs.cls = gysin_self_intersection(rhs.cls, s.degrees);

        bool ok = lhs.equals(rhs);
        out.checks.push_back({std::string("gysin_twist/") + kind_name(kind),
                              ok ? CheckStatus::pass : CheckStatus::fail,
                              ok ? "" : "cl(N).cl_vir != i_*i^! cl(P^n)"});
        if (!ok) return;
    }
}

void check_localization(const Scene& s, VerifyReport& out) {
    for (GenusKind kind : kAllKinds) {
        CohomologyClass m = CohomologyClass::zero(s.ambient_dim);
        try {
            m = milnor_class(kind, s);
        } catch (const DomainError&) {
            out.checks.push_back({std::string("localization/") + kind_name(kind),
                                  CheckStatus::skipped, "local data unavailable"});
            continue;
        }
        bool ok = true;
        for (int k = 0; k < s.ambient_dim; ++k) ok = ok && m.coeff(k).is_zero();
        out.checks.push_back({std::string("localization/") + kind_name(kind),
                              ok ? CheckStatus::pass : CheckStatus::fail,
                              ok ? "" : "Milnor class spreads below h^n"});
    }
}

void check_y_neg1(const Scene& s, VerifyReport& out) {
    if (has_ci_data(s)) {
        out.checks.push_back({"y_neg1", CheckStatus::skipped, "no chi_y data"});
        return;
    }
    ClassReport hz = functorial_class(GenusKind::hirzebruch, s);
    ClassReport ch = functorial_class(GenusKind::chern, s);
    bool ok = hz.functorial.cls.subst_y(Rational(-1)) == ch.functorial.cls &&
              hz.virtual_cls.cls.subst_y(Rational(-1)) == ch.virtual_cls.cls &&
              hz.milnor.cls.subst_y(Rational(-1)) == ch.milnor.cls;
    out.checks.push_back({"y_neg1", ok ? CheckStatus::pass : CheckStatus::fail,
                          ok ? "" : "hirzebruch at y=-1 differs from chern"});
}

void check_euler_degree(const Scene& s, VerifyReport& out) {
    ConstructibleFunction one = one_scene(s);
    ConstructibleFunction psi = psi_scene(s);
    Rational e_functorial =
        functorial_class(GenusKind::chern, s).functorial.cls.degree().constant_coeff();
    Rational e_virtual = virtual_genus(GenusKind::chern, s).constant_coeff();
    bool ok1 = Rational(euler_integral(one)) == e_functorial;
    bool ok2 = Rational(euler_integral(psi)) == e_virtual;
    std::ostringstream detail;
    if (!ok1) detail << "integral(1_X) != deg c(X); ";
    if (!ok2) detail << "integral(psi) != deg c_vir(X)";
    out.checks.push_back({"euler_degree", ok1 && ok2 ? CheckStatus::pass : CheckStatus::fail,
                          detail.str()});
}

void check_du_bois(const Scene& s, VerifyReport& out) {
    if (has_ci_data(s)) {
        out.checks.push_back({"du_bois", CheckStatus::skipped, "no chi_y data"});
        return;
    }
    GeneraReport g = genera_report(s);
    Rational discrepancy = g.arithmetic_genus - *g.hodge_chi0;
    long predicted = 0;
    int sign = s.dim() % 2 == 0 ? 1 : -1;
    for (auto& p : s.points) predicted += sign * p.germ.gr0_dim() * p.count;
    bool ok = discrepancy == Rational(predicted);
    if (s.all_du_bois()) ok = ok && discrepancy == Rational(0);
    std::ostringstream detail;
    detail << "discrepancy=" << discrepancy.str() << " predicted=" << predicted
           << (s.all_du_bois() ? " (all Du Bois)" : " (non-Du-Bois scene)");
    if (s.options.expected_du_bois_discrepancy) {
        ok = ok && discrepancy == Rational(*s.options.expected_du_bois_discrepancy);
        detail << ", annotated expected-fail with discrepancy "
               << *s.options.expected_du_bois_discrepancy;
    }
    out.checks.push_back({"du_bois", ok ? CheckStatus::pass : CheckStatus::fail, detail.str()});
}

void check_qhm_signature(const Scene& s, VerifyReport& out) {
    if (has_ci_data(s) || s.dim() % 2 != 0 || !s.all_qhm()) {
        out.checks.push_back({"qhm_signature", CheckStatus::skipped,
                              "needs an even-dimensional all-qhm scene"});
        return;
    }
    GeneraReport g = genera_report(s);
    bool ok = g.l_degree && g.chi_1 && *g.l_degree == *g.chi_1;
    out.checks.push_back({"qhm_signature", ok ? CheckStatus::pass : CheckStatus::fail,
                          ok ? "" : "L-degree differs from chi_1"});
}

void check_ci_degree(const Scene& s, VerifyReport& out) {
    if (!has_ci_data(s) || !s.options.declared_euler) {
        out.checks.push_back({"ci_degree", CheckStatus::skipped,
                              "no declared Euler number with local data"});
        return;
    }
    Rational lhs = virtual_genus(GenusKind::chern, s).constant_coeff() -
                   Rational(sum_ci_chi_tilde(s));
    bool ok = lhs == Rational(*s.options.declared_euler);
    out.checks.push_back({"ci_degree", ok ? CheckStatus::pass : CheckStatus::fail,
                          ok ? "" : "declared e(X) inconsistent with local data"});
}

} // namespace

VerifyReport verify_scene(const Scene& s) {
    s.validate();
    VerifyReport out;
    out.scene = s.name;
    // A DomainError inside a check means the identity is not defined on this
    // scene (missing local data, odd-dimensional signature); record it as
    // skipped rather than aborting the whole report.
    auto run = [&](const char* id, void (*check)(const Scene&, VerifyReport&)) {
        try {
            check(s, out);
        } catch (const DomainError& e) {
            out.checks.push_back({id, CheckStatus::skipped, e.what()});
        }
    };
    run("gysin_twist", check_gysin_twist);
    run("localization", check_localization);
    run("y_neg1", check_y_neg1);
    run("euler_degree", check_euler_degree);
    run("du_bois", check_du_bois);
    run("qhm_signature", check_qhm_signature);
    run("ci_degree", check_ci_degree);
    return out;
}

} // namespace singclass
