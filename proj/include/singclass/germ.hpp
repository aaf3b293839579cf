#ifndef SINGCLASS_GERM_HPP
#define SINGCLASS_GERM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "singclass/ypoly.hpp"

namespace singclass {

/* Multiset of spectral exponents in (0, n+1); total multiplicity is the
 * Milnor number. */
struct Spectrum {
    std::map<Rational, long> mult;
    long total() const;
    long multiplicity(const Rational& b) const;
};

/* Hodge-graded data of the reduced middle cohomology H^n of the Milnor
 * fiber: gr collects dim Gr^p_F, eigen refines by the monodromy exponent
 * alpha in [0,1). */
struct HodgeDatum {
    int degree;                                     // cohomological degree n
    std::map<int, long> gr;                         // p -> dim
    std::map<std::pair<Rational, int>, long> eigen; // (alpha, p) -> dim
};

/* Quasi-homogeneous isolated hypersurface singularity, recorded by its
 * weights w_i in (0,1) for a local equation of degree 1 on C^(n+1).
 * Construction validates that mu = prod(1/w_i - 1) is a positive integer
 * and eagerly computes the spectrum by the product formula
 * Sp(t) = prod_i (t^(w_i) - t)/(1 - t^(w_i)), evaluated exactly in
 * Z[t^(1/D)]; a failed exact division means the weights admit no isolated
 * representative and is rejected. Immutable afterwards. */
class SingularityGerm {
  public:
    static SingularityGerm from_weights(std::vector<Rational> weights, std::string label = "");
    /* x_0^(e_0) + ... + x_n^(e_n), weights 1/e_i. */
    static SingularityGerm brieskorn(const std::vector<long>& exponents, std::string label = "");
    /* ADE germs by their standard weight vectors, suspended to fiber
     * dimension dim: A_k = x^2 + y^(k+1), D_k = x^2 y + y^(k-1),
     * E6/E7/E8 = x^3 + y^4, x^3 + x y^3, x^3 + y^5. */
    static SingularityGerm ade(char series, int k, int dim);

    /* Thom-Sebastiani with z^2: appends weight 1/2, preserves mu, shifts
     * the spectrum by +1/2. */
    SingularityGerm suspension() const;

    const std::vector<Rational>& weights() const { return weights_; }
    const std::string& label() const { return label_; }
    /* Dimension n of the hypersurface germ (number of weights minus one). */
    int fiber_dim() const { return static_cast<int>(weights_.size()) - 1; }
    const mpz_class& mu() const { return mu_; }
    long mu_long() const;
    const Spectrum& spectrum() const { return spectrum_; }

    HodgeDatum hodge_datum() const;
    /* chi_y of the reduced cohomology of the Milnor fiber, concentrated in
     * degree n: (-1)^n sum_p dim Gr^p (-y)^p. */
    YPolynomial chi_y_reduced_fiber() const;
    /* hsp = sum over spectral exponents of t^(n+1-beta), returned as
     * exponent -> multiplicity. */
    std::map<Rational, long> hsp() const;

    long gr0_dim() const;
    bool du_bois() const { return gr0_dim() == 0; }

    /* Milnor-fiber signature for even n by the floor-parity rule on
     * non-integer spectral exponents; integer exponents span the radical
     * and contribute 0. */
    long signature_fiber() const;

  private:
    SingularityGerm() = default;
    std::vector<Rational> weights_;
    std::string label_;
    mpz_class mu_;
    Spectrum spectrum_;
};

/* Bundled germs with their conventional labels and default
 * rational-homology-manifold flags (used by the CLI catalog and tests). */
struct CatalogEntry {
    std::string name;
    SingularityGerm germ;
    bool qhm_default;
};
const std::vector<CatalogEntry>& germ_catalog();

} // namespace singclass

#endif
