#ifndef SINGCLASS_CONSTRUCTIBLE_HPP
#define SINGCLASS_CONSTRUCTIBLE_HPP

#include <map>
#include <string>
#include <vector>

#include "singclass/scene.hpp"

namespace singclass {

/* Locally closed stratum with its compactly-supported Euler characteristic.
 * chi_c is additive over strata, which is exactly what makes weighted sums
 * over a stratification well defined. */
struct Stratum {
    std::string id;
    long chi_c = 0;
    int dim = 0;
};

struct Stratification {
    std::vector<Stratum> strata;

    const Stratum* find(const std::string& id) const;
    void add(Stratum s);
};

/* Finite weighted sum of strata: alpha = sum n_j 1_(Z_j), stored as weights
 * on a fixed stratification. */
class ConstructibleFunction {
  public:
    explicit ConstructibleFunction(Stratification base) : base_(std::move(base)) {}

    const Stratification& base() const { return base_; }
    long weight(const std::string& id) const;
    void set_weight(const std::string& id, long w);

    ConstructibleFunction& operator+=(const ConstructibleFunction& o);
    ConstructibleFunction& operator-=(const ConstructibleFunction& o);
    ConstructibleFunction& operator*=(long s);
    friend ConstructibleFunction operator+(ConstructibleFunction a,
                                           const ConstructibleFunction& b) { return a += b; }
    friend ConstructibleFunction operator-(ConstructibleFunction a,
                                           const ConstructibleFunction& b) { return a -= b; }
    friend bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b);

    bool is_zero() const;
    const std::map<std::string, long>& weights() const { return w_; }

  private:
    Stratification base_;
    std::map<std::string, long> w_;
};

/* Pushforward to a point: sum of weight(id) * chi_c(id). The total space is
 * assumed compact, so chi_c agrees with the topological chi. */
long euler_integral(const ConstructibleFunction& alpha);

/* alpha box beta on the product stratification; chi_c is multiplicative. */
ConstructibleFunction exterior_product(const ConstructibleFunction& alpha,
                                       const ConstructibleFunction& beta);

/* Euler characteristic of a smooth member of the multidegree linear system,
 * read off as the degree of the Chern class of the virtual tangent bundle. */
long smooth_member_euler(int n, const std::vector<int>& degrees);

/* Stratification of a scene: the smooth open part plus one point stratum
 * per singular entry. chi_c of the smooth part is derived from
 * e(X) = e(X_t) - (-1)^n sum mu_x, never supplied by the user. */
Stratification scene_stratification(const Scene& s);

/* Characteristic function 1_X of the scene. */
ConstructibleFunction one_scene(const Scene& s);

/* Nearby-cycle function psi_f(1_M): 1 on the smooth part (the Milnor fiber
 * at a smooth point is contractible) and 1 + (-1)^n mu_x at each singular
 * point; for complete intersections the user-supplied iterated-fiber data
 * stands in for (-1)^n mu_x. */
ConstructibleFunction psi_scene(const Scene& s);

/* Vanishing-cycle function phi_f(1_M) = psi_f(1_M) - 1_X, supported on the
 * singular locus. */
ConstructibleFunction phi_scene(const Scene& s);

} // namespace singclass

#endif
