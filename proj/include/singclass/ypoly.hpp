#ifndef SINGCLASS_YPOLY_HPP
#define SINGCLASS_YPOLY_HPP

#include <map>
#include <optional>
#include <string>

#include "singclass/rational.hpp"

namespace singclass {

/* Laurent polynomial in the genus parameter y with rational coefficients.
 * Elements of Q[y,y^-1]; zero coefficients are never stored, so structural
 * equality is semantic equality. Units of this ring are the nonzero
 * monomials c*y^k; in particular (1+y) is NOT invertible here; callers
 * needing the localization divide out explicit (1+y) powers and must check
 * exactness (see div_one_plus_y). */
class YPolynomial {
  public:
    YPolynomial() = default;
    YPolynomial(const Rational& c) {
        if (!c.is_zero()) c_[0] = c;
    }
    YPolynomial(long c) : YPolynomial(Rational(c)) {}

    static YPolynomial zero() { return YPolynomial(); }
    static YPolynomial one() { return YPolynomial(Rational(1)); }
    /* c * y^k */
    static YPolynomial monomial(const Rational& c, int k) {
        YPolynomial p;
        if (!c.is_zero()) p.c_[k] = c;
        return p;
    }
    static YPolynomial y(int k = 1) { return monomial(Rational(1), k); }
    static YPolynomial one_plus_y() {
        YPolynomial p;
        p.c_[0] = Rational(1);
        p.c_[1] = Rational(1);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.count(0) && c_.at(0) == Rational(1); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.count(0)); }
    /* Unit test in the Laurent ring. */
    bool is_monomial() const { return c_.size() == 1; }

    Rational coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rational(0) : it->second;
    }
    Rational constant_coeff() const { return coeff(0); }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    const std::map<int, Rational>& coeffs() const { return c_; }

    void set_coeff(int k, const Rational& v) {
        if (v.is_zero())
            c_.erase(k);
        else
            c_[k] = v;
    }

    YPolynomial operator-() const {
        YPolynomial r;
        for (auto& [k, v] : c_) r.c_[k] = -v;
        return r;
    }
    YPolynomial& operator+=(const YPolynomial& o) {
        for (auto& [k, v] : o.c_) {
            auto it = c_.find(k);
            if (it == c_.end()) {
                c_[k] = v;
            } else {
                it->second += v;
                if (it->second.is_zero()) c_.erase(it);
            }
        }
        return *this;
    }
    YPolynomial& operator-=(const YPolynomial& o) { return *this += -o; }
    YPolynomial& operator*=(const YPolynomial& o) { return *this = *this * o; }

    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
    friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
        YPolynomial r;
        for (auto& [i, u] : a.c_)
            for (auto& [j, v] : b.c_) {
                Rational p = u * v;
                auto it = r.c_.find(i + j);
                if (it == r.c_.end()) {
                    if (!p.is_zero()) r.c_[i + j] = p;
                } else {
                    it->second += p;
                    if (it->second.is_zero()) r.c_.erase(it);
                }
            }
        return r;
    }
    friend YPolynomial operator*(const Rational& s, const YPolynomial& p) {
        YPolynomial r;
        if (s.is_zero()) return r;
        for (auto& [k, v] : p.c_) r.c_[k] = s * v;
        return r;
    }

    friend bool operator==(const YPolynomial& a, const YPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const YPolynomial& a, const YPolynomial& b) { return !(a == b); }

    YPolynomial pow(long e) const {
        if (e < 0) {
            if (!is_monomial()) throw DomainError("negative power of non-monomial y-polynomial");
            return inverse().pow(-e);
        }
        YPolynomial r = one(), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /* Inverse in Q[y,y^-1]; defined only for monomials. */
    YPolynomial inverse() const {
        if (!is_monomial()) throw DomainError("y-polynomial not invertible (not a monomial)");
        auto& [k, v] = *c_.begin();
        return monomial(v.inverse(), -k);
    }

    /* Substitute a rational value for y. */
    Rational eval(const Rational& y) const {
        Rational acc(0);
        for (auto& [k, v] : c_) acc += v * y.pow(k);
        return acc;
    }

    /* Exact division by (1+y); nullopt when the remainder is nonzero.
     * The Laurent offset y^min is a unit and passes through untouched. */
    std::optional<YPolynomial> div_one_plus_y() const {
        if (is_zero()) return YPolynomial();
        int lo = min_exp(), hi = max_exp();
        if (hi == lo) return std::nullopt;   // nonzero monomial: never divisible
        // Synthetic division from the top: p = (1+y)q + r.
        YPolynomial q;
        Rational carry(0);                   // q-coefficient one level above
        for (int k = hi; k > lo; --k) {
            Rational qk = coeff(k) - carry;
            q.set_coeff(k - 1, qk);
            carry = qk;
        }
        if (coeff(lo) - carry != Rational(0)) return std::nullopt;
        return q;
    }

    std::string str(const std::string& var = "y") const;

  private:
    std::map<int, Rational> c_;
};

} // namespace singclass

#endif
