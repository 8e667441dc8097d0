#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superwig/errors.hpp"
#include "superwig/exact.hpp"

#include <Eigen/LU>

using namespace sw;

TEST_CASE("rational canonical form and printing") {
    CHECK(Rational(2).str() == "2/1");
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational::parse("3/9") == Rational(1, 3));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow(Rational(2), -2) == Rational(1, 4));
    CHECK(Rational(-1, 7) < Rational(0));
}

TEST_CASE("rational errors") {
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(0).inverse());
    CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("coefficient products") {
    CoefficientValue half(1, Rational(1, 2));
    CHECK(mul(half, half) == CoefficientValue(1, Rational(1, 4)));
    CHECK(mul(CoefficientValue(-1, Rational(2, 3)), CoefficientValue(1, Rational(3, 2))) == CoefficientValue(-1, Rational(1)));
    CHECK(mul(CoefficientValue(1, Rational(0)), half).is_zero());
    CHECK(CoefficientValue(-1, Rational(0)) == CoefficientValue::zero());
}

TEST_CASE("coefficient squares") {
    CHECK(square(CoefficientValue(1, Rational(1, 2))) == Rational(1, 2));
    CHECK(square(CoefficientValue(-1, Rational(1, 2))) == Rational(1, 2));
    CHECK(square(CoefficientValue::zero()) == Rational(0));
    CHECK(square(CoefficientValue(1, Rational(-3))) == Rational(-3));
}

TEST_CASE("square part") {
    auto [s, f] = square_part(mpz_class(72));
    CHECK(s == 6);
    CHECK(f == 2);
    auto [s2, f2] = square_part(mpz_class(1));
    CHECK(s2 == 1);
    CHECK(f2 == 1);
    auto [s3, f3] = square_part(mpz_class("1000000016000000063"));  // 1000000007 * 1000000009
    CHECK(s3 == 1);
    auto [s4, f4] = square_part(mpz_class("1000000014000000049"));  // 1000000007^2
    CHECK(s4 == mpz_class("1000000007"));
    CHECK(f4 == 1);
}

TEST_CASE("radical sums") {
    RadicalSum a;
    CoefficientValue r2(1, Rational(2)), r8(1, Rational(8)), h(1, Rational(1, 2));
    a.add_product(r2, r8);  // 4
    CHECK(a.is_rational(Rational(4)));
    RadicalSum b;
    b.add_product(r2, h);              // 1
    b.add_product(CoefficientValue(-1, Rational(3)), CoefficientValue(1, Rational(1, 3)));  // -1
    CHECK(b.is_zero());
    RadicalSum c;
    c.add_product(r2, CoefficientValue(1, Rational(3)));  // sqrt 6
    CHECK_FALSE(c.is_rational(Rational(0)));
    CHECK_FALSE(c.is_zero());
    RadicalSum d;
    d.add_product(CoefficientValue(1, Rational(-1)), CoefficientValue(1, Rational(-1)));  // i * i
    CHECK(d.is_rational(Rational(-1)));
}

TEST_CASE("eigen containers hold exact values") {
    RationalMatrix m(2, 2);
    m << Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5);
    RationalMatrix p = m * m;
    CHECK(p(0, 0) == Rational(1, 4) + Rational(1, 12));
    CHECK(m.determinant() == Rational(1, 10) - Rational(1, 12));
}
