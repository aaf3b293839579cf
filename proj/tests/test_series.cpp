#include <doctest.h>

#include <random>

#include "singclass/power_series.hpp"

using namespace singclass;

namespace {

PowerSeries geometric(int order, const Rational& ratio) {
    PowerSeries s(order);
    Rational c(1);
    for (int k = 0; k < order; ++k) {
        s.set_coeff(k, YPolynomial(c));
        c *= ratio;
    }
    return s;
}

PowerSeries one_plus_cz(int order, const YPolynomial& c) {
    PowerSeries s = PowerSeries::one(order);
    s.set_coeff(1, c);
    return s;
}

PowerSeries random_series(std::mt19937& rng, int order, bool zero_const, bool laurent = true) {
    std::uniform_int_distribution<int> exp(laurent ? -2 : 0, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> terms(0, 3);
    PowerSeries s(order);
    for (int k = zero_const ? 1 : 0; k < order; ++k) {
        YPolynomial c;
        int t = terms(rng);
        for (int i = 0; i < t; ++i) c.set_coeff(exp(rng), Rational(num(rng), den(rng)));
        s.set_coeff(k, c);
    }
    return s;
}

} // namespace

TEST_CASE("series product basics") {
    PowerSeries a = one_plus_cz(5, YPolynomial::one());              // 1+z
    PowerSeries b = one_plus_cz(5, YPolynomial(Rational(-1)));       // 1-z
    PowerSeries expect(5);
    expect.set_coeff(0, YPolynomial::one());
    expect.set_coeff(2, YPolynomial(Rational(-1)));
    CHECK(a * b == expect);   // 1 - z^2

    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        PowerSeries s = random_series(rng, 8, false);
        CHECK(PowerSeries::one(8) * s == s);
    }
}

TEST_CASE("telescoping: (sum z^k)(1-z) == 1 at order 10") {
    PowerSeries geo = geometric(10, Rational(1));
    PowerSeries b = one_plus_cz(10, YPolynomial(Rational(-1)));
    CHECK(geo * b == PowerSeries::one(10));
}

TEST_CASE("order mismatch is a usage error") {
    CHECK_THROWS_AS(PowerSeries::one(4) * PowerSeries::one(5), UsageError);
    CHECK_THROWS_AS(PowerSeries::one(4) + PowerSeries::one(5), UsageError);
}

TEST_CASE("series inverse") {
    CHECK(one_plus_cz(12, YPolynomial(Rational(-1))).inverse() == geometric(12, Rational(1)));
    CHECK(PowerSeries::one(6).inverse() == PowerSeries::one(6));
    // inv(1+4z) = sum (-4)^k z^k, the K3 normal-bundle factor
    CHECK(one_plus_cz(9, YPolynomial(Rational(4))).inverse() == geometric(9, Rational(-4)));
    CHECK_THROWS_AS(PowerSeries::z(5).inverse(), DomainError);
    PowerSeries bad = PowerSeries::constant(5, YPolynomial::one_plus_y());
    CHECK_THROWS_AS(bad.inverse(), DomainError);
}

TEST_CASE("inverse is an involution and a true inverse") {
    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
        PowerSeries s = random_series(rng, 7, false);
        // force an invertible constant term c*y^k
        std::uniform_int_distribution<int> num(1, 5);
        std::uniform_int_distribution<int> exp(-2, 2);
        s.set_coeff(0, YPolynomial::monomial(Rational(num(rng)), exp(rng)));
        CHECK(s.inverse().inverse() == s);
        CHECK(s * s.inverse() == PowerSeries::one(7));
    }
}

TEST_CASE("series exp and log") {
    PowerSeries e = PowerSeries::z(10).exp();
    Rational inv_fact(1);
    for (int k = 0; k < 10; ++k) {
        CHECK(e.coeff(k) == YPolynomial(inv_fact));
        inv_fact /= Rational(k + 1);
    }
    CHECK(PowerSeries::one(8).log() == PowerSeries::zero(8));
    CHECK(one_plus_cz(12, YPolynomial::one()).log().exp() == one_plus_cz(12, YPolynomial::one()));
    CHECK_THROWS_AS(PowerSeries::one(5).exp(), DomainError);
    CHECK_THROWS_AS(PowerSeries::z(5).log(), DomainError);
}

TEST_CASE("exp turns sums into products") {
    std::mt19937 rng(23);
    for (int t = 0; t < 200; ++t) {
        PowerSeries a = random_series(rng, 6, true);
        PowerSeries b = random_series(rng, 6, true);
        CHECK((a + b).exp() == a.exp() * b.exp());
        CHECK(a.exp().log() == a);
    }
}

TEST_CASE("rescale substitutes z -> c z") {
    PowerSeries e = PowerSeries::z(9).exp();
    PowerSeries e2 = e.rescale(YPolynomial(Rational(2)));
    Rational expect(1), pow2(1);
    for (int k = 0; k < 9; ++k) {
        CHECK(e2.coeff(k) == YPolynomial(expect * pow2 * Rational(1)));
        pow2 *= Rational(2);
        expect /= Rational(k + 1);
    }
    std::mt19937 rng(5);
    PowerSeries s = random_series(rng, 7, false);
    PowerSeries s0 = s.rescale(YPolynomial::zero());
    CHECK(s0.coeff(0) == s.coeff(0));
    for (int k = 1; k < 7; ++k) CHECK(s0.coeff(k).is_zero());
    // rescale(1+z, 1+y) = 1 + (1+y) z, the Q_y building block
    PowerSeries lam = one_plus_cz(4, YPolynomial::one()).rescale(YPolynomial::one_plus_y());
    CHECK(lam.coeff(1) == YPolynomial::one_plus_y());
}

TEST_CASE("ring axioms on random series triples") {
    std::mt19937 rng(37);
    for (int t = 0; t < 200; ++t) {
        PowerSeries a = random_series(rng, 6, false);
        PowerSeries b = random_series(rng, 6, false);
        PowerSeries c = random_series(rng, 6, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("serial and parallel kernels agree exactly") {
    std::mt19937 rng(31);
    for (int order : {5, 33, 64}) {
        for (int t = 0; t < 30; ++t) {
            PowerSeries a = random_series(rng, order, false);
            PowerSeries b = random_series(rng, order, false);
            PowerSeries s = kernels::mul_serial(a, b);
            CHECK(s == kernels::mul_parallel(a, b));
            CHECK(s == a * b);
        }
    }
}
