#ifndef SINGCLASS_ENGINE_HPP
#define SINGCLASS_ENGINE_HPP

#include <optional>

#include "singclass/constructible.hpp"
#include "singclass/scene.hpp"

namespace singclass {

/* Virtual tangent bundle of the scene's complete intersection, presented by
 * the Euler sequence: (n+1) O(1) - O - sum_i O(d_i). */
BundleClass t_vir(const Scene& s);

/* cl^vir(X) = cl(T_vir X) cap [X], pushed forward to P^n. The lambda kind
 * carries its (1+y) ledger; the other kinds always produce a plain class. */
LocalizedClass virtual_class_localized(GenusKind kind, const Scene& s);
CohomologyClass virtual_class(GenusKind kind, const Scene& s);

/* Degree of the virtual class: the characteristic number of a nearby smooth
 * member of the same multidegree. */
YPolynomial virtual_genus(GenusKind kind, const Scene& s);

/* Localized Milnor class sum_x local(x) h^n. Per point: (-1)^n mu for
 * chern, chi_y of the reduced Milnor-fiber cohomology for hirzebruch and
 * lambda, its y=0 value for todd, and the fiber signature for lclass
 * (user-supplied when dim X is odd). Complete intersections require
 * user-supplied local data and support the chern kind only. */
CohomologyClass milnor_class(GenusKind kind, const Scene& s);

struct ClassReport {
    GenusKind kind;
    LocalizedClass virtual_cls;
    LocalizedClass milnor;       // ledger always 0; kept for uniform JSON
    LocalizedClass functorial;   // virtual - milnor, exponents aligned
};

ClassReport functorial_class(GenusKind kind, const Scene& s);

/* The headline numbers of a scene. chi_y-derived entries are absent for
 * singular complete intersections (only degree-level chern data exists
 * there); l_degree is absent when dim X is odd and no user signatures were
 * supplied. */
struct GeneraReport {
    Rational euler;
    std::optional<YPolynomial> chi_y;
    Rational arithmetic_genus;
    std::optional<Rational> hodge_chi0;
    std::optional<Rational> chi_1;
    std::optional<Rational> l_degree;
};

GeneraReport genera_report(const Scene& s);

enum class CheckStatus { pass, fail, skipped };
const char* status_name(CheckStatus s);

struct VerifyCheck {
    std::string id;
    CheckStatus status;
    std::string detail;
};

struct VerifyReport {
    std::string scene;
    std::vector<VerifyCheck> checks;
    bool passed() const;
};

/* Runs the identity suite on a scene:
 *   gysin_twist      cl(N) . cl^vir(X) == i_* i^! cl(P^n), every kind
 *   localization     Milnor classes live in h^n only
 *   y_neg1           hirzebruch report at y=-1 equals the chern report
 *   euler_degree     integral of 1_X and psi match the class degrees
 *   du_bois          arithmetic genus minus hodge_chi0 equals the
 *                    predicted sum of (-1)^n dim Gr^0 over the points
 *   qhm_signature    L-degree equals chi_1 on rational-homology-manifold
 *                    scenes of even dimension
 *   ci_degree        declared Euler number matches the virtual degree
 *                    minus the user-supplied local terms
 * Failures are entries in the report, never exceptions. */
VerifyReport verify_scene(const Scene& s);

} // namespace singclass

#endif
