#ifndef SINGCLASS_POWER_SERIES_HPP
#define SINGCLASS_POWER_SERIES_HPP

#include <vector>

#include "singclass/ypoly.hpp"

namespace singclass {

/* Truncated formal power series in one variable z over Q[y,y^-1].
 * order() is the exclusive truncation bound N: coefficients are indexed
 * 0..N-1 and every operation works modulo z^N. Values are immutable in
 * practice (all operations return new series) and safe to share across
 * threads. */
class PowerSeries {
  public:
    explicit PowerSeries(int order) : c_(check_order(order)) {}
    PowerSeries(int order, std::vector<YPolynomial> coeffs);

    static PowerSeries zero(int order) { return PowerSeries(order); }
    static PowerSeries one(int order);
    static PowerSeries z(int order);
    static PowerSeries constant(int order, const YPolynomial& c);

    int order() const { return static_cast<int>(c_.size()); }
    const YPolynomial& coeff(int k) const { return c_.at(k); }
    const std::vector<YPolynomial>& coeffs() const { return c_; }
    void set_coeff(int k, const YPolynomial& v) { c_.at(k) = v; }

    bool is_zero() const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const YPolynomial& s, const PowerSeries& a);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    /* Multiplicative inverse; requires an invertible constant coefficient
     * (a nonzero monomial in Q[y,y^-1]). */
    PowerSeries inverse() const;

    /* exp requires constant coefficient 0, log requires constant
     * coefficient 1; both are mutually inverse up to truncation. */
    PowerSeries exp() const;
    PowerSeries log() const;

    /* Substitution z -> c*z: coefficient k picks up a factor c^k. */
    PowerSeries rescale(const YPolynomial& c) const;

    /* Integer powers, negative ones via inverse(). */
    PowerSeries pow(long e) const;

    /* Substitute a rational value for y in every coefficient. */
    PowerSeries subst_y(const Rational& y) const;

    PowerSeries truncate(int new_order) const;

    std::string str(const std::string& var = "z") const;

  private:
    static int check_order(int order);
    std::vector<YPolynomial> c_;
};

namespace kernels {

/* Cauchy product, one output coefficient at a time. The serial routine is
 * the reference; the OpenMP routine distributes output coefficients over
 * threads and must agree with it bit for bit (arithmetic is exact and the
 * per-coefficient summation order is identical). */
PowerSeries mul_serial(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul_parallel(const PowerSeries& a, const PowerSeries& b);

/* Orders at or above this dispatch to the parallel kernel. */
inline constexpr int kParallelMulThreshold = 48;

} // namespace kernels

} // namespace singclass

#endif
