#include "singclass/germ.hpp"

#include <algorithm>

namespace singclass {

long Spectrum::total() const {
    long t = 0;
    for (auto& [b, m] : mult) t += m;
    return t;
}

long Spectrum::multiplicity(const Rational& b) const {
    auto it = mult.find(b);
    return it == mult.end() ? 0 : it->second;
}

namespace {

constexpr long kMaxCommonDenominator = 100000;
constexpr long kMaxSpectrumDegree = 2000000;

long to_long(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw UsageError(std::string(what) + " out of range");
    return z.get_si();
}

/* Divide p exactly by (1 - s^a); DomainError when the division leaves a
 * remainder. Ascending recurrence q_k = p_k + q_(k-a). */
std::vector<mpz_class> divide_one_minus_power(const std::vector<mpz_class>& p, long a) {
    long dp = static_cast<long>(p.size()) - 1;
    std::vector<mpz_class> q(p.size());
    for (long k = 0; k <= dp; ++k) {
        q[k] = p[k];
        if (k >= a) q[k] += q[k - a];
    }
    for (long k = std::max<long>(dp - a + 1, 0); k <= dp; ++k)
        if (q[k] != 0)
            throw DomainError("weights do not define an isolated quasi-homogeneous germ "
                              "(spectrum division is inexact)");
    q.resize(std::max<long>(dp - a + 1, 1));
    return q;
}

} // namespace

SingularityGerm SingularityGerm::from_weights(std::vector<Rational> weights, std::string label) {
    if (weights.empty()) throw UsageError("germ needs at least one weight");
    mpz_class denom_lcm = 1;
    mpq_class mu_q = 1;
    for (auto& w : weights) {
        if (!(w > Rational(0) && w < Rational(1)))
            throw DomainError("germ weights must lie strictly between 0 and 1");
        denom_lcm = lcm_z(denom_lcm, w.den());
        mu_q *= mpq_class(1) / w.raw() - 1;
    }
    mu_q.canonicalize();
    if (mu_q.get_den() != 1 || mu_q <= 0)
        throw DomainError("Milnor number prod(1/w_i - 1) is not a positive integer");

    long D = to_long(denom_lcm, "weight common denominator");
    if (D > kMaxCommonDenominator) throw UsageError("weight denominators too large");

    // Numerator prod s^(a_i) (1 - s^(D - a_i)), then exact division by each
    // (1 - s^(a_i)); exponent e of the result is the spectral number
    // (shift + e)/D.
    long shift = 0;
    std::vector<mpz_class> poly{1};
    std::vector<long> exps;
    for (auto& w : weights) {
        long a = to_long(w.num() * (denom_lcm / w.den()), "weight numerator");
        exps.push_back(a);
        shift += a;
        long grow = D - a;
        if (static_cast<long>(poly.size()) + grow > kMaxSpectrumDegree)
            throw UsageError("spectrum degree too large");
        std::vector<mpz_class> next(poly.size() + grow);
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + grow] -= poly[k];
        }
        poly = std::move(next);
    }
    for (long a : exps) poly = divide_one_minus_power(poly, a);

    SingularityGerm g;
    g.weights_ = std::move(weights);
    g.label_ = std::move(label);
    g.mu_ = mu_q.get_num();
    for (size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == 0) continue;
        if (poly[k] < 0)
            throw DomainError("weights do not define an isolated quasi-homogeneous germ "
                              "(negative spectral multiplicity)");
        g.spectrum_.mult[Rational(mpz_class(shift + k), mpz_class(D))] =
            to_long(poly[k], "spectral multiplicity");
    }
    if (g.spectrum_.total() != g.mu_)
        throw DomainError("spectrum total differs from the Milnor number");
    return g;
}

SingularityGerm SingularityGerm::brieskorn(const std::vector<long>& exponents,
                                           std::string label) {
    std::vector<Rational> w;
    for (long e : exponents) {
        if (e < 2) throw DomainError("Brieskorn exponents must be >= 2");
        w.push_back(Rational(1, e));
    }
    return from_weights(std::move(w), std::move(label));
}

SingularityGerm SingularityGerm::ade(char series, int k, int dim) {
    std::vector<Rational> w;
    std::string name;
    switch (series) {
        case 'A':
            if (k < 1) throw UsageError("A_k needs k >= 1");
            w = {Rational(1, 2), Rational(1, k + 1)};
            name = "A" + std::to_string(k);
            break;
        case 'D':
            if (k < 4) throw UsageError("D_k needs k >= 4");
            w = {Rational(k - 2, 2 * (k - 1)), Rational(1, k - 1)};
            name = "D" + std::to_string(k);
            break;
        case 'E':
            if (k == 6) w = {Rational(1, 3), Rational(1, 4)};
            else if (k == 7) w = {Rational(1, 3), Rational(2, 9)};
            else if (k == 8) w = {Rational(1, 3), Rational(1, 5)};
            else throw UsageError("E_k needs k in {6,7,8}");
            name = "E" + std::to_string(k);
            break;
        default:
            throw UsageError("ADE series must be 'A', 'D' or 'E'");
    }
    SingularityGerm g = from_weights(std::move(w), name);
    while (g.fiber_dim() < dim) g = g.suspension();
    if (g.fiber_dim() != dim) throw UsageError("ADE germ dimension too small");
    return g;
}

SingularityGerm SingularityGerm::suspension() const {
    std::vector<Rational> w = weights_;
    w.push_back(Rational(1, 2));
    return from_weights(std::move(w), label_);
}

long SingularityGerm::mu_long() const { return to_long(mu_, "Milnor number"); }

HodgeDatum SingularityGerm::hodge_datum() const {
    int n = fiber_dim();
    HodgeDatum d;
    d.degree = n;
    for (auto& [b, m] : spectrum_.mult) {
        Rational refl = Rational(n + 1) - b;
        int p = static_cast<int>(to_long(refl.floor(), "Hodge level"));
        d.gr[p] += m;
        d.eigen[{refl.frac(), p}] += m;
    }
    return d;
}

YPolynomial SingularityGerm::chi_y_reduced_fiber() const {
    int n = fiber_dim();
    HodgeDatum d = hodge_datum();
    YPolynomial chi;
    for (auto& [p, m] : d.gr) {
        long s = ((n + p) % 2 == 0) ? m : -m;   // (-1)^n (-1)^p
        chi += YPolynomial::monomial(Rational(s), p);
    }
    return chi;
}

std::map<Rational, long> SingularityGerm::hsp() const {
    int n = fiber_dim();
    std::map<Rational, long> h;
    for (auto& [b, m] : spectrum_.mult) h[Rational(n + 1) - b] += m;
    return h;
}

long SingularityGerm::gr0_dim() const {
    HodgeDatum d = hodge_datum();
    auto it = d.gr.find(0);
    return it == d.gr.end() ? 0 : it->second;
}

long SingularityGerm::signature_fiber() const {
    if (fiber_dim() % 2 != 0)
        throw DomainError("Milnor-fiber signature rule needs even fiber dimension");
    long sig = 0;
    for (auto& [b, m] : spectrum_.mult) {
        if (b.is_integer()) continue;
        bool even_floor = mpz_even_p(b.floor().get_mpz_t()) != 0;
        sig += even_floor ? m : -m;
    }
    return sig;
}

const std::vector<CatalogEntry>& germ_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"A1-curve", SingularityGerm::ade('A', 1, 1), true});
        v.push_back({"A2-curve (cusp)", SingularityGerm::ade('A', 2, 1), true});
        for (int k = 1; k <= 5; ++k)
            v.push_back({"A" + std::to_string(k), SingularityGerm::ade('A', k, 2), true});
        for (int k = 4; k <= 6; ++k)
            v.push_back({"D" + std::to_string(k), SingularityGerm::ade('D', k, 2), true});
        for (int k = 6; k <= 8; ++k)
            v.push_back({"E" + std::to_string(k), SingularityGerm::ade('E', k, 2), true});
        v.push_back({"simple-elliptic",
                     SingularityGerm::brieskorn({3, 3, 3}, "simple-elliptic"), false});
        v.push_back({"cone-quartic",
                     SingularityGerm::brieskorn({4, 4, 4}, "cone-quartic"), false});
        v.push_back({"A1-threefold", SingularityGerm::ade('A', 1, 3), true});
        return v;
    }();
    return entries;
}

} // namespace singclass
