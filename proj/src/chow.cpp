#include "singclass/chow.hpp"

#include <sstream>

namespace singclass {

CohomologyClass::CohomologyClass(int ambient_dim) : n_(ambient_dim) {
    if (ambient_dim < 0) throw UsageError("ambient dimension must be >= 0");
    c_.resize(n_ + 1);
}

CohomologyClass CohomologyClass::one(int n) {
    CohomologyClass r(n);
    r.c_[0] = YPolynomial::one();
    return r;
}

CohomologyClass CohomologyClass::monomial(int n, int k, const YPolynomial& c) {
    CohomologyClass r(n);
    if (k < 0) throw UsageError("negative h-power");
    if (k <= n) r.c_[k] = c;   // h^k = 0 above the ambient dimension
    return r;
}

CohomologyClass CohomologyClass::from_series(int n, const PowerSeries& f, long a) {
    CohomologyClass r(n);
    Rational ak(1);
    for (int k = 0; k <= n; ++k) {
        if (k < f.order()) r.c_[k] = ak * f.coeff(k);
        ak *= Rational(a);
    }
    if (f.order() < n + 1)
        throw UsageError("series order too small for ambient dimension");
    return r;
}

bool CohomologyClass::is_zero() const {
    for (auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

static void require_same_ambient(const CohomologyClass& a, const CohomologyClass& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw UsageError("ambient dimension mismatch");
}

CohomologyClass CohomologyClass::operator-() const {
    CohomologyClass r(n_);
    for (int k = 0; k <= n_; ++k) r.c_[k] = -c_[k];
    return r;
}

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
    require_same_ambient(a, b);
    CohomologyClass r(a.n_);
    for (int k = 0; k <= a.n_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
    require_same_ambient(a, b);
    CohomologyClass r(a.n_);
    for (int k = 0; k <= a.n_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
    require_same_ambient(a, b);
    CohomologyClass r(a.n_);
    for (int i = 0; i <= a.n_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.n_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

CohomologyClass operator*(const YPolynomial& s, const CohomologyClass& a) {
    CohomologyClass r(a.n_);
    for (int k = 0; k <= a.n_; ++k) r.c_[k] = s * a.c_[k];
    return r;
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
}

CohomologyClass CohomologyClass::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CohomologyClass r = one(n_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

CohomologyClass CohomologyClass::inverse() const {
    if (!c_[0].is_monomial())
        throw DomainError("class constant term not invertible in Q[y,y^-1]");
    // (u + m)^-1 = u^-1 sum (-u^-1 m)^k with m nilpotent.
    YPolynomial u_inv = c_[0].inverse();
    CohomologyClass m(n_);
    for (int k = 1; k <= n_; ++k) m.c_[k] = u_inv * c_[k];
    CohomologyClass acc = one(n_), term = one(n_);
    for (int k = 1; k <= n_; ++k) {
        term = term * m;
        if (k % 2)
            acc = acc - term;
        else
            acc = acc + term;
    }
    return u_inv * acc;
}

CohomologyClass CohomologyClass::exp_nilpotent() const {
    if (!c_[0].is_zero()) throw DomainError("exp_nilpotent needs zero constant term");
    CohomologyClass acc = one(n_), term = one(n_);
    Rational inv_fact(1);
    for (int k = 1; k <= n_; ++k) {
        term = term * (*this);
        inv_fact /= Rational(k);
        acc = acc + YPolynomial(inv_fact) * term;
    }
    return acc;
}

CohomologyClass CohomologyClass::subst_y(const Rational& y) const {
    CohomologyClass r(n_);
    for (int k = 0; k <= n_; ++k) r.c_[k] = YPolynomial(c_[k].eval(y));
    return r;
}

CohomologyClass CohomologyClass::div_one_plus_y_pow(int e) const {
    CohomologyClass r = *this;
    for (int step = 0; step < e; ++step) {
        for (int k = 0; k <= n_; ++k) {
            auto q = r.c_[k].div_one_plus_y();
            if (!q) throw DomainError("class not divisible by (1+y)");
            r.c_[k] = *q;
        }
    }
    return r;
}

int CohomologyClass::one_plus_y_valuation(int cap) const {
    CohomologyClass r = *this;
    for (int e = 0; e < cap; ++e) {
        CohomologyClass next(n_);
        for (int k = 0; k <= n_; ++k) {
            auto q = r.c_[k].div_one_plus_y();
            if (!q) return e;
            next.c_[k] = *q;
        }
        r = next;
    }
    return cap;
}

std::string CohomologyClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= n_; ++k) {
        if (c_[k].is_zero()) continue;
        os << (first ? "" : " + ");
        first = false;
        bool unit = c_[k].is_one();
        if (k == 0 || !unit) {
            bool parens = c_[k].coeffs().size() > 1;
            os << (parens ? "(" : "") << c_[k].str() << (parens ? ")" : "");
            if (k > 0) os << "*";
        }
        if (k == 1) os << "h";
        if (k > 1) os << "h^" << k;
    }
    if (first) os << "0";
    return os.str();
}

YPolynomial degree(const CohomologyClass& a) { return a.degree(); }

CohomologyClass fundamental_class(int n, const std::vector<int>& degrees) {
    int r = static_cast<int>(degrees.size());
    if (r > n) throw UsageError("codimension exceeds ambient dimension");
    YPolynomial prod = YPolynomial::one();
    for (int d : degrees) {
        if (d < 1) throw UsageError("complete-intersection degrees must be >= 1");
        prod *= YPolynomial(Rational(d));
    }
    return CohomologyClass::monomial(n, r, prod);
}

CohomologyClass gysin_self_intersection(const CohomologyClass& a,
                                        const std::vector<int>& degrees) {
    return a * fundamental_class(a.ambient_dim(), degrees);
}

} // namespace singclass
