#include "singclass/power_series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <sstream>

namespace singclass {

int PowerSeries::check_order(int order) {
    if (order < 1) throw UsageError("series order must be >= 1");
    return order;
}

PowerSeries::PowerSeries(int order, std::vector<YPolynomial> coeffs) : c_(std::move(coeffs)) {
    check_order(order);
    c_.resize(order);
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s.c_[0] = YPolynomial::one();
    return s;
}

PowerSeries PowerSeries::z(int order) {
    PowerSeries s(order);
    if (order > 1) s.c_[1] = YPolynomial::one();
    return s;
}

PowerSeries PowerSeries::constant(int order, const YPolynomial& c) {
    PowerSeries s(order);
    s.c_[0] = c;
    return s;
}

bool PowerSeries::is_zero() const {
    for (auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

static void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw UsageError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()));
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(order());
    for (int k = 0; k < order(); ++k) r.c_[k] = -c_[k];
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (int k = 0; k < a.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r(a.order());
    for (int k = 0; k < a.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

PowerSeries operator*(const YPolynomial& s, const PowerSeries& a) {
    PowerSeries r(a.order());
    for (int k = 0; k < a.order(); ++k) r.c_[k] = s * a.c_[k];
    return r;
}

namespace kernels {

static YPolynomial cauchy_coeff(const PowerSeries& a, const PowerSeries& b, int k) {
    YPolynomial acc;
    for (int i = 0; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
    return acc;
}

PowerSeries mul_serial(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    const int n = a.order();
    PowerSeries r(n);
    for (int k = 0; k < n; ++k) r.set_coeff(k, cauchy_coeff(a, b, k));
    return r;
}

PowerSeries mul_parallel(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    const int n = a.order();
    PowerSeries r(n);
#ifdef _OPENMP
    // Cost per coefficient grows with k; dynamic scheduling balances that.
    #pragma omp parallel for schedule(dynamic)
#endif
    for (int k = 0; k < n; ++k) r.set_coeff(k, cauchy_coeff(a, b, k));
    return r;
}

} // namespace kernels

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
#ifdef _OPENMP
    if (a.order() >= kernels::kParallelMulThreshold && omp_get_max_threads() > 1)
        return kernels::mul_parallel(a, b);
#endif
    return kernels::mul_serial(a, b);
}

PowerSeries PowerSeries::inverse() const {
    const YPolynomial& a0 = c_[0];
    if (!a0.is_monomial())
        throw DomainError("series constant term not invertible in Q[y,y^-1]");
    YPolynomial u = a0.inverse();
    // b_n = -a_0^-1 * sum_{k=1..n} a_k b_{n-k}
    PowerSeries b(order());
    b.c_[0] = u;
    for (int n = 1; n < order(); ++n) {
        YPolynomial acc;
        for (int k = 1; k <= n; ++k) acc += c_[k] * b.c_[n - k];
        b.c_[n] = -(u * acc);
    }
    return b;
}

PowerSeries PowerSeries::exp() const {
    if (!c_[0].is_zero()) throw DomainError("exp needs zero constant term");
    // g' = a' g  =>  n g_n = sum_{k=1..n} k a_k g_{n-k}
    PowerSeries g(order());
    g.c_[0] = YPolynomial::one();
    for (int n = 1; n < order(); ++n) {
        YPolynomial acc;
        for (int k = 1; k <= n; ++k) acc += (Rational(k) * c_[k]) * g.c_[n - k];
        g.c_[n] = Rational(1, n) * acc;
    }
    return g;
}

PowerSeries PowerSeries::log() const {
    if (!c_[0].is_one()) throw DomainError("log needs constant term 1");
    // l' a = a'  =>  l_n = a_n - (1/n) sum_{j=1..n-1} j l_j a_{n-j}
    PowerSeries l(order());
    for (int n = 1; n < order(); ++n) {
        YPolynomial acc;
        for (int j = 1; j < n; ++j) acc += (Rational(j) * l.c_[j]) * c_[n - j];
        l.c_[n] = c_[n] - Rational(1, n) * acc;
    }
    return l;
}

PowerSeries PowerSeries::rescale(const YPolynomial& c) const {
    PowerSeries r(order());
    r.c_[0] = c_[0];
    YPolynomial ck = YPolynomial::one();
    for (int k = 1; k < order(); ++k) {
        ck *= c;
        r.c_[k] = ck * c_[k];
    }
    return r;
}

PowerSeries PowerSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    PowerSeries r = one(order()), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

PowerSeries PowerSeries::subst_y(const Rational& y) const {
    PowerSeries r(order());
    for (int k = 0; k < order(); ++k) r.c_[k] = YPolynomial(c_[k].eval(y));
    return r;
}

PowerSeries PowerSeries::truncate(int new_order) const {
    check_order(new_order);
    PowerSeries r(new_order);
    for (int k = 0; k < new_order && k < order(); ++k) r.c_[k] = c_[k];
    return r;
}

std::string PowerSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < order(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string coeff = c_[k].str();
        bool negated = false;
        if (!first && coeff.size() && coeff[0] == '-' && c_[k].coeffs().size() == 1) {
            coeff = (-c_[k]).str();
            negated = true;
        }
        os << (first ? "" : negated ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << coeff;
            continue;
        }
        bool needs_parens = c_[k].coeffs().size() > 1;
        if (needs_parens)
            os << "(" << coeff << ")";
        else if (coeff != "1")
            os << coeff << " ";
        os << var;
        if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace singclass
