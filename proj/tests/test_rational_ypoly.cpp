#include <doctest.h>

#include <random>

#include "singclass/ypoly.hpp"

using namespace singclass;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, -8).str() == "-3/4");
    CHECK(Rational(-6, -8).str() == "3/4");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/6").str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("1.5"), UsageError);
    CHECK_THROWS_AS(Rational::parse(""), UsageError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic, floor, pow") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(3, 2).floor() == 1);
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(7, 3).frac() == Rational(1, 3));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
}

TEST_CASE("y-polynomial basics") {
    YPolynomial p = YPolynomial::one_plus_y();
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(1));
    CHECK(p.str() == "1 + y");
    CHECK((p - p).is_zero());
    CHECK(YPolynomial::monomial(Rational(1), -1).str() == "y^-1");
    CHECK((YPolynomial::y() * YPolynomial::y(-1)).is_one());
    CHECK(p.eval(Rational(-1)) == Rational(0));
    CHECK(p.pow(2).str() == "1 + 2*y + y^2");
}

TEST_CASE("y-polynomial units") {
    CHECK(YPolynomial::monomial(Rational(-2, 3), 4).inverse() ==
          YPolynomial::monomial(Rational(-3, 2), -4));
    CHECK_THROWS_AS(YPolynomial::one_plus_y().inverse(), DomainError);
    CHECK_THROWS_AS(YPolynomial::zero().inverse(), DomainError);
}

TEST_CASE("exact division by (1+y)") {
    YPolynomial w = YPolynomial::one_plus_y();
    YPolynomial p = w.pow(3);
    auto q = p.div_one_plus_y();
    REQUIRE(q);
    CHECK(*q == w.pow(2));
    // Laurent offset passes through.
    YPolynomial lp = YPolynomial::y(-2) * w;
    auto lq = lp.div_one_plus_y();
    REQUIRE(lq);
    CHECK(*lq == YPolynomial::y(-2));
    CHECK(!YPolynomial::y().div_one_plus_y());
    CHECK(!(w + YPolynomial(1)).div_one_plus_y());
    CHECK(YPolynomial::zero().div_one_plus_y());
}

namespace {

YPolynomial random_ypoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-3, 4);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> terms(0, 4);
    YPolynomial p;
    int t = terms(rng);
    for (int i = 0; i < t; ++i) p.set_coeff(exp(rng), Rational(num(rng), den(rng)));
    return p;
}

} // namespace

TEST_CASE("y-polynomial ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        YPolynomial a = random_ypoly(rng), b = random_ypoly(rng), c = random_ypoly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("division by (1+y) is inverse to multiplication") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        YPolynomial a = random_ypoly(rng);
        auto q = (YPolynomial::one_plus_y() * a).div_one_plus_y();
        REQUIRE(q);
        CHECK(*q == a);
    }
}
