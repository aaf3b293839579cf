#ifndef SINGCLASS_RATIONAL_HPP
#define SINGCLASS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

#include "singclass/errors.hpp"

namespace singclass {

/* Exact rational number, always in lowest terms with positive denominator.
 * Thin wrapper over GMP's mpq_class; every value is canonical after
 * construction, so equality is structural. */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long n, long d) { set(mpq_class(n), mpq_class(d)); }
    Rational(const mpz_class& n, const mpz_class& d) { set(mpq_class(n), mpq_class(d)); }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /* Accepts "p", "-p", "p/q" with arbitrary-precision digits. */
    static Rational parse(const std::string& s) {
        if (s.empty()) throw UsageError("empty rational literal");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw UsageError("bad rational literal: '" + s + "'");
        if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    /* Fractional part in [0,1). */
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw DomainError("0^negative");
            return Rational(0);
        }
        mpz_class n, d;
        unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), a);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), a);
        return e > 0 ? Rational(n, d) : Rational(d, n);
    }

    Rational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rational(v_.get_den(), v_.get_num());
    }

    /* "p" for integers, "p/q" otherwise; never floating point. */
    std::string str() const {
        return is_integer() ? v_.get_num().get_str() : v_.get_str();
    }

  private:
    void set(const mpq_class& n, const mpq_class& d) {
        if (d == 0) throw DomainError("zero denominator");
        v_ = n / d;
    }
    mpq_class v_;
};

inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace singclass

#endif
