#include "singclass/genus.hpp"

namespace singclass {

const char* kind_name(GenusKind k) {
    switch (k) {
        case GenusKind::chern: return "chern";
        case GenusKind::todd: return "todd";
        case GenusKind::lclass: return "lclass";
        case GenusKind::hirzebruch: return "hirzebruch";
        case GenusKind::lambda_dual: return "lambda";
    }
    return "?";
}

GenusKind kind_from_string(const std::string& s) {
    if (s == "chern") return GenusKind::chern;
    if (s == "todd") return GenusKind::todd;
    if (s == "lclass" || s == "l") return GenusKind::lclass;
    if (s == "hirzebruch" || s == "chi_y") return GenusKind::hirzebruch;
    if (s == "lambda" || s == "lambda_dual") return GenusKind::lambda_dual;
    throw UsageError("unknown genus kind '" + s + "'");
}

static bool is_lambda_shape(const PowerSeries& f) {
    if (f.coeff(0) != YPolynomial::one_plus_y()) return false;
    if (f.order() > 1 && f.coeff(1) != -YPolynomial::y()) return false;
    for (int k = 2; k < f.order(); ++k)
        if (!f.coeff(k).is_zero()) return false;
    return f.order() > 1;
}

GenusSpec GenusSpec::from_series(PowerSeries f) {
    YPolynomial unit = f.coeff(0);
    if (unit.is_zero()) throw DomainError("genus series needs a nonzero constant term");
    bool lambda = is_lambda_shape(f);
    if (!unit.is_monomial() && !lambda)
        throw DomainError("genus unit must be a monomial in y (or the lambda form 1+y-yz)");
    bool normalized = unit.is_one();
    return GenusSpec{std::move(f), std::move(unit), normalized, lambda};
}

GenusSpec builtin_genus(GenusKind kind, int order) {
    if (order < 1) throw UsageError("genus order must be >= 1");
    if (kind == GenusKind::lambda_dual) {
        PowerSeries f(std::max(order, 2));
        f.set_coeff(0, YPolynomial::one_plus_y());
        f.set_coeff(1, -YPolynomial::y());
        return GenusSpec::from_series(std::move(f));
    }
    // Q_y(z) = z(1+y)/(1 - e^{-z(1+y)}) - zy, built from the library's own
    // primitives: invert (1-e^{-u})/u = sum (-1)^k u^k/(k+1)!, substitute
    // u = z(1+y), subtract zy.
    PowerSeries g(order);
    Rational inv_fact(1);
    for (int k = 0; k < order; ++k) {
        g.set_coeff(k, YPolynomial(k % 2 ? -inv_fact : inv_fact));
        inv_fact /= Rational(k + 2);
    }
    PowerSeries q = g.inverse().rescale(YPolynomial::one_plus_y());
    if (order > 1) q.set_coeff(1, q.coeff(1) - YPolynomial::y());
    switch (kind) {
        case GenusKind::hirzebruch: break;
        case GenusKind::chern: q = q.subst_y(Rational(-1)); break;
        case GenusKind::todd: q = q.subst_y(Rational(0)); break;
        case GenusKind::lclass: q = q.subst_y(Rational(1)); break;
        default: break;
    }
    return GenusSpec::from_series(std::move(q));
}

void BundleClass::add_twist(int a, long multiplicity) {
    twists[a] += multiplicity;
    if (twists[a] == 0) twists.erase(a);
}

long BundleClass::virtual_rank() const {
    long r = 0;
    for (auto& [a, m] : twists) r += m;
    for (auto& s : chern_summands) r += s.rank;
    return r;
}

std::map<int, long> tvir_twists(int n, const std::vector<int>& degrees) {
    std::map<int, long> t;
    t[1] += n + 1;
    t[0] -= 1;
    for (int d : degrees) t[d] -= 1;
    for (auto it = t.begin(); it != t.end();)
        it = it->second == 0 ? t.erase(it) : std::next(it);
    return t;
}

void LocalizedClass::normalize() {
    if (one_plus_y_exp <= 0) return;
    int v = cls.one_plus_y_valuation(one_plus_y_exp);
    if (v > 0) {
        cls = cls.div_one_plus_y_pow(v);
        one_plus_y_exp -= v;
    }
}

bool LocalizedClass::equals(const LocalizedClass& o) const {
    YPolynomial w = YPolynomial::one_plus_y();
    return w.pow(o.one_plus_y_exp) * cls == w.pow(one_plus_y_exp) * o.cls;
}

CohomologyClass LocalizedClass::demand_plain() const {
    LocalizedClass c = *this;
    c.normalize();
    if (c.one_plus_y_exp != 0)
        throw DomainError("inexact (1+y) division: class lives in the localization only");
    return c.cls;
}

/* (1+y-y a h)^-1 = adj / (1+y)^(n+1), with
 * adj = sum_{k=0..n} (y a)^k (1+y)^(n-k) h^k. */
static CohomologyClass lambda_adjugate(int n, long a) {
    CohomologyClass adj(n);
    YPolynomial w = YPolynomial::one_plus_y();
    YPolynomial ya_pow = YPolynomial::one();
    for (int k = 0; k <= n; ++k) {
        adj.set_coeff(k, ya_pow * w.pow(n - k));
        ya_pow *= YPolynomial::monomial(Rational(a), 1);
    }
    return adj;
}

/* Newton's identities over Q[y]: p_k = e_1 p_{k-1} - e_2 p_{k-2} + ...
 * +- k e_k, with e_j the h^j coefficient of the total Chern class. */
static std::vector<YPolynomial> power_sums(const CohomologyClass& total_chern) {
    int n = total_chern.ambient_dim();
    std::vector<YPolynomial> p(n + 1);
    for (int k = 1; k <= n; ++k) {
        YPolynomial acc;
        for (int i = 1; i < k; ++i) {
            YPolynomial t = total_chern.coeff(i) * p[k - i];
            acc += (i % 2 ? t : -t);
        }
        YPolynomial top = Rational(k) * total_chern.coeff(k);
        acc += (k % 2 ? top : -top);
        p[k] = acc;
    }
    return p;
}

static CohomologyClass newton_value(const PowerSeries& normalized_series, long rank,
                                    const CohomologyClass& total_chern) {
    int n = total_chern.ambient_dim();
    if (!total_chern.coeff(0).is_one())
        throw UsageError("total Chern class must have constant term 1");
    (void)rank;   // normalized: f(0)^rank == 1
    PowerSeries g = normalized_series.truncate(n + 1).log();
    std::vector<YPolynomial> p = power_sums(total_chern);
    CohomologyClass arg(n);
    for (int k = 1; k <= n; ++k) arg.set_coeff(k, g.coeff(k) * p[k]);
    return arg.exp_nilpotent();
}

/* Lambda form on Chern data: prod (1+y - y x_i) = sum_j (-y)^j (1+y)^(r-j) c_j.
 * Negative exponents of (1+y) go on the ledger. */
static LocalizedClass lambda_chern_value(long rank, const CohomologyClass& total_chern) {
    int n = total_chern.ambient_dim();
    if (!total_chern.coeff(0).is_one())
        throw UsageError("total Chern class must have constant term 1");
    int ledger = static_cast<int>(std::max<long>(0, n - rank));
    YPolynomial w = YPolynomial::one_plus_y();
    CohomologyClass num(n);
    YPolynomial my_pow = YPolynomial::one();   // (-y)^j
    for (int j = 0; j <= n; ++j) {
        num.set_coeff(j, my_pow * w.pow(ledger + rank - j) * total_chern.coeff(j));
        my_pow *= YPolynomial::monomial(Rational(-1), 1);
    }
    LocalizedClass v{num, ledger};
    v.normalize();
    return v;
}

LocalizedClass genus_of_bundle_localized(const GenusSpec& spec, const BundleClass& bundle) {
    int n = bundle.ambient_dim;
    if (spec.order() < n + 1) throw UsageError("genus series order too small for ambient P^n");
    LocalizedClass acc{CohomologyClass::one(n), 0};

    if (spec.lambda_form) {
        for (auto& [a, m] : bundle.twists) {
            if (m > 0) {
                acc.cls = acc.cls * CohomologyClass::from_series(n, spec.series, a).pow(m);
            } else if (m < 0) {
                acc.cls = acc.cls * lambda_adjugate(n, a).pow(-m);
                acc.one_plus_y_exp += static_cast<int>((n + 1) * (-m));
            }
        }
        for (auto& s : bundle.chern_summands) {
            LocalizedClass v = lambda_chern_value(s.rank, s.total_chern);
            acc.cls = acc.cls * v.cls;
            acc.one_plus_y_exp += v.one_plus_y_exp;
        }
        acc.normalize();
        return acc;
    }

    // Unit u is a monomial: f = u * fhat with fhat normalized, so the value
    // is u^rank * prod fhat(a_i h).
    PowerSeries fhat = spec.normalized ? spec.series : spec.unit.inverse() * spec.series;
    for (auto& [a, m] : bundle.twists)
        acc.cls = acc.cls * CohomologyClass::from_series(n, fhat, a).pow(m);
    for (auto& s : bundle.chern_summands)
        acc.cls = acc.cls * newton_value(fhat, s.rank, s.total_chern);
    if (!spec.normalized) acc.cls = spec.unit.pow(bundle.virtual_rank()) * acc.cls;
    return acc;
}

CohomologyClass genus_of_bundle(const GenusSpec& spec, const BundleClass& bundle) {
    return genus_of_bundle_localized(spec, bundle).demand_plain();
}

LocalizedClass genus_from_chern_localized(const GenusSpec& spec, long rank,
                                          const CohomologyClass& total_chern) {
    if (spec.lambda_form) return lambda_chern_value(rank, total_chern);
    int n = total_chern.ambient_dim();
    if (spec.order() < n + 1) throw UsageError("genus series order too small for ambient P^n");
    PowerSeries fhat = spec.normalized ? spec.series : spec.unit.inverse() * spec.series;
    CohomologyClass v = newton_value(fhat, rank, total_chern);
    if (!spec.normalized) v = spec.unit.pow(rank) * v;
    return LocalizedClass{v, 0};
}

CohomologyClass genus_from_chern(const GenusSpec& spec, long rank,
                                 const CohomologyClass& total_chern) {
    return genus_from_chern_localized(spec, rank, total_chern).demand_plain();
}

} // namespace singclass
