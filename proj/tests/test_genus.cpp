#include <doctest.h>

#include <random>

#include "singclass/genus.hpp"

using namespace singclass;

namespace {

YPolynomial one_plus_y_pow(int e) { return YPolynomial::one_plus_y().pow(e); }

BundleClass split_bundle(int n, std::initializer_list<std::pair<int, long>> twists) {
    BundleClass b(n);
    for (auto& [a, m] : twists) b.add_twist(a, m);
    return b;
}

} // namespace

TEST_CASE("Q_y expansion to order 5") {
    GenusSpec q = builtin_genus(GenusKind::hirzebruch, 5);
    CHECK(q.normalized);
    CHECK(q.series.coeff(0) == YPolynomial::one());
    // (1-y)/2
    YPolynomial z1;
    z1.set_coeff(0, Rational(1, 2));
    z1.set_coeff(1, Rational(-1, 2));
    CHECK(q.series.coeff(1) == z1);
    CHECK(q.series.coeff(2) == Rational(1, 12) * one_plus_y_pow(2));
    CHECK(q.series.coeff(3).is_zero());
    CHECK(q.series.coeff(4) == Rational(-1, 720) * one_plus_y_pow(4));
}

TEST_CASE("Q_y at y=-1 collapses to 1+z through order 30") {
    GenusSpec c = builtin_genus(GenusKind::chern, 30);
    CHECK(c.series.coeff(0).is_one());
    CHECK(c.series.coeff(1).is_one());
    for (int k = 2; k < 30; ++k) CHECK(c.series.coeff(k).is_zero());
}

TEST_CASE("todd and L specializations") {
    GenusSpec td = builtin_genus(GenusKind::todd, 5);
    CHECK(td.series.coeff(1) == YPolynomial(Rational(1, 2)));
    CHECK(td.series.coeff(2) == YPolynomial(Rational(1, 12)));
    CHECK(td.series.coeff(3).is_zero());
    CHECK(td.series.coeff(4) == YPolynomial(Rational(-1, 720)));
    GenusSpec l = builtin_genus(GenusKind::lclass, 5);
    CHECK(l.series.coeff(1).is_zero());
    CHECK(l.series.coeff(2) == YPolynomial(Rational(1, 3)));
    CHECK(l.series.coeff(3).is_zero());
    CHECK(l.series.coeff(4) == YPolynomial(Rational(-1, 45)));
}

TEST_CASE("lambda series") {
    GenusSpec lam = builtin_genus(GenusKind::lambda_dual, 6);
    CHECK(!lam.normalized);
    CHECK(lam.lambda_form);
    CHECK(lam.unit == YPolynomial::one_plus_y());
    CHECK(lam.series.coeff(1) == -YPolynomial::y());
    for (int k = 2; k < 6; ++k) CHECK(lam.series.coeff(k).is_zero());
}

TEST_CASE("specialization coherence of the builtin family") {
    for (int order : {3, 7, 12}) {
        GenusSpec q = builtin_genus(GenusKind::hirzebruch, order);
        CHECK(q.series.subst_y(Rational(-1)) == builtin_genus(GenusKind::chern, order).series);
        CHECK(q.series.subst_y(Rational(0)) == builtin_genus(GenusKind::todd, order).series);
        CHECK(q.series.subst_y(Rational(1)) == builtin_genus(GenusKind::lclass, order).series);
        // constant term 1 and z-linear coefficient (1-y)/2 at every order
        CHECK(q.series.coeff(0).is_one());
        if (order > 1) {
            YPolynomial z1;
            z1.set_coeff(0, Rational(1, 2));
            z1.set_coeff(1, Rational(-1, 2));
            CHECK(q.series.coeff(1) == z1);
        }
    }
}

TEST_CASE("chern genus of T P^2 is (1+h)^3 truncated") {
    GenusSpec c = builtin_genus(GenusKind::chern, 3);
    BundleClass tp2(2);
    tp2.twists = tvir_twists(2, {});
    CohomologyClass v = genus_of_bundle(c, tp2);
    CHECK(v.coeff(0).is_one());
    CHECK(v.coeff(1) == YPolynomial(Rational(3)));
    CHECK(v.coeff(2) == YPolynomial(Rational(3)));
}

TEST_CASE("todd genus of T P^1") {
    GenusSpec td = builtin_genus(GenusKind::todd, 2);
    BundleClass tp1(1);
    tp1.twists = tvir_twists(1, {});
    CohomologyClass v = genus_of_bundle(td, tp1);
    CHECK(v.coeff(0).is_one());
    CHECK(v.coeff(1).is_one());
    CHECK(v.degree() == YPolynomial(Rational(1)));   // chi(O_P1) = 1
}

TEST_CASE("any genus of the zero bundle is 1") {
    BundleClass zero(3);
    for (auto kind : {GenusKind::chern, GenusKind::todd, GenusKind::lclass,
                      GenusKind::hirzebruch}) {
        CHECK(genus_of_bundle(builtin_genus(kind, 4), zero) == CohomologyClass::one(3));
    }
    // lambda of the zero bundle: empty product, rank 0
    CHECK(genus_of_bundle(builtin_genus(GenusKind::lambda_dual, 4), zero) ==
          CohomologyClass::one(3));
}

TEST_CASE("trivial summands contribute f(0)^rank") {
    // product-scene shadow of the trivial-normal-bundle factor: adding +-r
    // copies of O multiplies by 1 for the normalized kinds and by (1+y)^r
    // for the dual lambda class
    BundleClass base = split_bundle(2, {{1, 2}});
    BundleClass padded = base;
    padded.add_twist(0, 3);
    for (auto kind : {GenusKind::chern, GenusKind::todd, GenusKind::hirzebruch}) {
        GenusSpec spec = builtin_genus(kind, 3);
        CHECK(genus_of_bundle(spec, padded) == genus_of_bundle(spec, base));
    }
    GenusSpec lam = builtin_genus(GenusKind::lambda_dual, 3);
    CHECK(genus_of_bundle(lam, padded) ==
          one_plus_y_pow(3) * genus_of_bundle(lam, base));
    // negative trivial twists divide the ledger instead
    BundleClass negated = base;
    negated.add_twist(0, -2);
    LocalizedClass loc = genus_of_bundle_localized(lam, negated);
    LocalizedClass expect{genus_of_bundle(lam, base), 2};
    CHECK(loc.equals(expect));
}

TEST_CASE("genus_from_chern equals the split product route") {
    // the module's central dual-route check, kept independent of the
    // series-product path
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> twist(-3, 3);
    std::uniform_int_distribution<int> dim(1, 5);
    for (auto kind : {GenusKind::chern, GenusKind::todd, GenusKind::lclass,
                      GenusKind::hirzebruch, GenusKind::lambda_dual}) {
        for (int t = 0; t < 200; ++t) {
            int n = dim(rng);
            int a = twist(rng), b = twist(rng);
            GenusSpec spec = builtin_genus(kind, n + 1);
            // rank-2 split bundle O(a) + O(b): c = 1 + (a+b)h + ab h^2
            CohomologyClass chern_total = CohomologyClass::one(n);
            if (n >= 1) chern_total.set_coeff(1, YPolynomial(Rational(a + b)));
            if (n >= 2) chern_total.set_coeff(2, YPolynomial(Rational(a) * Rational(b)));
            LocalizedClass newton = genus_from_chern_localized(spec, 2, chern_total);
            LocalizedClass product =
                genus_of_bundle_localized(spec, split_bundle(n, {{a, 1}, {b, 1}}));
            CHECK(newton.equals(product));
        }
    }
}

TEST_CASE("Newton path on virtual bundles with negative multiplicities") {
    std::mt19937 rng(113);
    std::uniform_int_distribution<int> twist(-3, 3);
    std::uniform_int_distribution<int> mult(-2, 3);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> nterms(1, 3);
    for (int t = 0; t < 220; ++t) {
        int n = dim(rng);
        GenusKind kind = static_cast<GenusKind>(t % 5);
        GenusSpec spec = builtin_genus(kind, n + 1);
        BundleClass bundle(n);
        for (int i = nterms(rng); i > 0; --i) bundle.add_twist(twist(rng), mult(rng));
        // total Chern class of the virtual sum: prod (1+a h)^(m_a)
        CohomologyClass total = CohomologyClass::one(n);
        for (auto& [a, m] : bundle.twists) {
            CohomologyClass line = CohomologyClass::one(n);
            if (n >= 1) line.set_coeff(1, YPolynomial(Rational(a)));
            total = total * line.pow(m);
        }
        LocalizedClass newton =
            genus_from_chern_localized(spec, bundle.virtual_rank(), total);
        LocalizedClass product = genus_of_bundle_localized(spec, bundle);
        CHECK(newton.equals(product));
    }
}

TEST_CASE("genus_from_chern trivial and identity cases") {
    for (long r : {0L, 1L, 5L}) {
        CHECK(genus_from_chern(builtin_genus(GenusKind::todd, 4), r,
                               CohomologyClass::one(3)) == CohomologyClass::one(3));
        CHECK(genus_from_chern(builtin_genus(GenusKind::lambda_dual, 4), r,
                               CohomologyClass::one(3)) ==
              one_plus_y_pow(static_cast<int>(r)) * CohomologyClass::one(3));
    }
    // the chern genus is the identity on total Chern classes
    std::mt19937 rng(103);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int t = 0; t < 50; ++t) {
        CohomologyClass c = CohomologyClass::one(4);
        for (int k = 1; k <= 4; ++k) c.set_coeff(k, YPolynomial(Rational(num(rng))));
        CHECK(genus_from_chern(builtin_genus(GenusKind::chern, 5), 4, c) == c);
    }
    CHECK_THROWS_AS(genus_from_chern(builtin_genus(GenusKind::todd, 4), 2,
                                     CohomologyClass::zero(3)),
                    UsageError);
}

TEST_CASE("multiplicativity on random split bundles") {
    std::mt19937 rng(107);
    std::uniform_int_distribution<int> twist(-3, 3);
    std::uniform_int_distribution<int> mult(-2, 3);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<int> nterms(1, 3);
    for (int t = 0; t < 250; ++t) {
        int n = dim(rng);
        GenusKind kind = static_cast<GenusKind>(t % 4);   // normalized kinds
        GenusSpec spec = builtin_genus(kind, n + 1);
        BundleClass e(n), f(n), sum(n);
        for (int i = nterms(rng); i > 0; --i) {
            int a = twist(rng);
            long m = mult(rng);
            e.add_twist(a, m);
            sum.add_twist(a, m);
        }
        for (int i = nterms(rng); i > 0; --i) {
            int a = twist(rng);
            long m = mult(rng);
            f.add_twist(a, m);
            sum.add_twist(a, m);
        }
        CHECK(genus_of_bundle(spec, e) * genus_of_bundle(spec, f) ==
              genus_of_bundle(spec, sum));
    }
}

TEST_CASE("lambda multiplicativity with the ledger") {
    std::mt19937 rng(109);
    std::uniform_int_distribution<int> twist(-2, 2);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int t = 0; t < 200; ++t) {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        GenusSpec lam = builtin_genus(GenusKind::lambda_dual, n + 1);
        BundleClass e(n), f(n), sum(n);
        for (int i = 0; i < 2; ++i) {
            int a = twist(rng);
            long m = mult(rng);
            e.add_twist(a, m);
            sum.add_twist(a, m);
            int b = twist(rng);
            long mm = mult(rng);
            f.add_twist(b, mm);
            sum.add_twist(b, mm);
        }
        LocalizedClass le = genus_of_bundle_localized(lam, e);
        LocalizedClass lf = genus_of_bundle_localized(lam, f);
        LocalizedClass ls = genus_of_bundle_localized(lam, sum);
        LocalizedClass prod{le.cls * lf.cls, le.one_plus_y_exp + lf.one_plus_y_exp};
        CHECK(prod.equals(ls));
    }
}

TEST_CASE("Newton path on a non-split presentation with chern summands") {
    // same bundle entered twice: once as twists, once as a chern summand
    GenusSpec td = builtin_genus(GenusKind::todd, 4);
    BundleClass split = split_bundle(3, {{1, 2}, {-1, 1}});
    CohomologyClass total = CohomologyClass::one(3);
    // c(O(1)^2 + O(-1)) = (1+h)^2 (1-h) = 1 + h - h^2 - h^3
    total.set_coeff(1, YPolynomial(Rational(1)));
    total.set_coeff(2, YPolynomial(Rational(-1)));
    total.set_coeff(3, YPolynomial(Rational(-1)));
    BundleClass packaged(3);
    packaged.chern_summands.push_back({3, total});
    CHECK(genus_of_bundle(td, packaged) == genus_of_bundle(td, split));
}

TEST_CASE("residual (1+y) ledger refuses to produce a plain class") {
    // lambda of -O(1) over P^2: the h^2 coefficient keeps a y^2 numerator
    GenusSpec lam = builtin_genus(GenusKind::lambda_dual, 3);
    BundleClass b = split_bundle(2, {{1, -1}});
    LocalizedClass loc = genus_of_bundle_localized(lam, b);
    CHECK(loc.one_plus_y_exp > 0);
    CHECK_THROWS_AS(genus_of_bundle(lam, b), DomainError);
}
