#ifndef SINGCLASS_CHOW_HPP
#define SINGCLASS_CHOW_HPP

#include <vector>

#include "singclass/power_series.hpp"

namespace singclass {

/* Element of Q[y,y^-1][h]/(h^(n+1)), the even cohomology of P^n with
 * Laurent-in-y coefficients. Homology classes of subvarieties are stored
 * pushed forward to P^n, identified with cohomology by capping with [P^n];
 * the degree map reads off the coefficient of h^n (the point class). */
class CohomologyClass {
  public:
    explicit CohomologyClass(int ambient_dim);

    static CohomologyClass zero(int n) { return CohomologyClass(n); }
    static CohomologyClass one(int n);
    /* c * h^k */
    static CohomologyClass monomial(int n, int k, const YPolynomial& c);
    /* Evaluate a series at a*h: sum_k f_k a^k h^k, truncated at h^(n+1). */
    static CohomologyClass from_series(int n, const PowerSeries& f, long a);

    int ambient_dim() const { return n_; }
    const YPolynomial& coeff(int k) const { return c_.at(k); }
    void set_coeff(int k, const YPolynomial& v) { c_.at(k) = v; }
    bool is_zero() const;

    /* Coefficient of h^n: the characteristic number after pushforward. */
    const YPolynomial& degree() const { return c_.at(n_); }

    CohomologyClass operator-() const;
    friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
    friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b);
    friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b);
    friend CohomologyClass operator*(const YPolynomial& s, const CohomologyClass& a);
    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);
    friend bool operator!=(const CohomologyClass& a, const CohomologyClass& b) { return !(a == b); }

    CohomologyClass pow(long e) const;
    /* Needs an invertible (monomial) constant term. */
    CohomologyClass inverse() const;
    /* exp of a class with zero constant term; finite because h is nilpotent. */
    CohomologyClass exp_nilpotent() const;
    /* Substitute a rational value for y in every coefficient. */
    CohomologyClass subst_y(const Rational& y) const;
    /* Divide every coefficient exactly by (1+y)^e; DomainError when inexact. */
    CohomologyClass div_one_plus_y_pow(int e) const;
    /* Largest e such that (1+y)^e divides every coefficient (capped). */
    int one_plus_y_valuation(int cap) const;

    std::string str() const;

  private:
    int n_;
    std::vector<YPolynomial> c_;   // index k = coefficient of h^k
};

/* Characteristic number: coefficient of h^n. */
YPolynomial degree(const CohomologyClass& a);

/* Pushforward to P^n of the fundamental class of a smooth complete
 * intersection of the given multidegree: (prod d_i) h^r. */
CohomologyClass fundamental_class(int n, const std::vector<int>& degrees);

/* i_* i^! on classes pushed to P^n: multiplication by prod(d_i h), the top
 * Chern class of the normal bundle of the complete intersection. */
CohomologyClass gysin_self_intersection(const CohomologyClass& a, const std::vector<int>& degrees);

} // namespace singclass

#endif
