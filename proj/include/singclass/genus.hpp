#ifndef SINGCLASS_GENUS_HPP
#define SINGCLASS_GENUS_HPP

#include <map>
#include <string>
#include <vector>

#include "singclass/chow.hpp"

namespace singclass {

enum class GenusKind { chern, todd, lclass, hirzebruch, lambda_dual };

const char* kind_name(GenusKind k);
GenusKind kind_from_string(const std::string& s);

/* A multiplicative characteristic class, presented by the power series f(z)
 * it takes on a line bundle with first Chern class z. Stable classes have a
 * unit f(0); the dual lambda class has f(0) = 1+y, which is not a unit of
 * Q[y,y^-1] and gets dedicated (1+y)-ledger handling downstream. */
struct GenusSpec {
    PowerSeries series;
    YPolynomial unit;     // f(0)
    bool normalized;      // f(0) == 1
    bool lambda_form;     // exactly 1 + y - y z

    static GenusSpec from_series(PowerSeries f);
    int order() const { return series.order(); }
};

/* The builtin series. hirzebruch is Q_y(z) = z(1+y)/(1-e^{-z(1+y)}) - zy;
 * chern, todd and lclass are its y = -1, 0, 1 specializations; lambda_dual
 * is the unnormalized 1 + y - y z. */
GenusSpec builtin_genus(GenusKind kind, int order);

/* Virtual sum of line-bundle twists O(a) plus optional non-split summands
 * given by rank and total Chern class. */
struct ChernSummand {
    long rank;
    CohomologyClass total_chern;   // constant term 1
};

struct BundleClass {
    int ambient_dim;
    std::map<int, long> twists;               // a -> multiplicity of O(a)
    std::vector<ChernSummand> chern_summands;

    explicit BundleClass(int n) : ambient_dim(n) {}
    void add_twist(int a, long multiplicity);
    long virtual_rank() const;
};

/* Twist data of the virtual tangent bundle of a multidegree-d complete
 * intersection in P^n: (n+1) O(1) - O - sum_i O(d_i). */
std::map<int, long> tvir_twists(int n, const std::vector<int>& degrees);

/* A cohomology class divided by an explicit power of (1+y). Keeps the
 * localization R = Z[y,(1+y)^-1] honest: the denominator is carried as an
 * integer ledger and only ever cleared by verified exact division. */
struct LocalizedClass {
    CohomologyClass cls;
    int one_plus_y_exp = 0;

    /* Clear as much of the ledger as divides exactly. */
    void normalize();
    bool equals(const LocalizedClass& o) const;   // cross-multiplied comparison
    /* Demand a plain class; DomainError if the ledger cannot be cleared. */
    CohomologyClass demand_plain() const;
};

/* Splitting-principle product over the twists and summands of a bundle.
 * The plain variant throws DomainError when a required (1+y) division is
 * inexact; the localized variant reports the residual ledger instead. */
CohomologyClass genus_of_bundle(const GenusSpec& spec, const BundleClass& bundle);
LocalizedClass genus_of_bundle_localized(const GenusSpec& spec, const BundleClass& bundle);

/* Genus of a rank-r bundle presented by its total Chern class. Normalized
 * specs go through the Newton-identities expansion: with g = log f =
 * sum a_k z^k, recover power sums p_k from the c_j and evaluate
 * f(0)^r exp(sum a_k p_k). The lambda form uses its closed expansion
 * sum_j (-y)^j (1+y)^(r-j) c_j instead. */
CohomologyClass genus_from_chern(const GenusSpec& spec, long rank,
                                 const CohomologyClass& total_chern);
LocalizedClass genus_from_chern_localized(const GenusSpec& spec, long rank,
                                          const CohomologyClass& total_chern);

} // namespace singclass

#endif
