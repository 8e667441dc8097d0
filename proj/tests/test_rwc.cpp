#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superwig/errors.hpp"
#include "superwig/rwc.hpp"

using namespace sw;

namespace {
BranchContext ctx11(long L1, long L2, long l) { return BranchContext(Weight({1, 1}, {L1, L2}), Weight({1, 0}, {l})); }
} // namespace

TEST_CASE("barred c on gl(1|1)") {
    auto a = ctx11(1, 0, 1);
    CHECK(c_bar(a, 1) == Rational(1, 2));
    CHECK(c_bar(a, 2) == Rational(1, 2));
    auto b = ctx11(1, 0, 0);
    CHECK(c_bar(b, 2) == Rational(1));
    CHECK(c_bar(b, 1) == Rational(0));
}

TEST_CASE("unbarred c on gl(1|1)") {
    auto a = ctx11(0, -2, -1);
    CHECK(c_unbar(a, 1) == Rational(1, 3));
    CHECK(c_unbar(a, 2) == Rational(2, 3));
    CHECK(c_unbar(ctx11(0, -2, 0), 2) == Rational(1));
    auto n = ctx11(2, 0, 1);
    CHECK(c_unbar(n, 1) == Rational(-1));
    CHECK(c_unbar(n, 2) == Rational(2));
}

TEST_CASE("reduced matrix elements") {
    CHECK(delta_bar(ctx11(1, 0, 0), 1) == Rational(1));
    CHECK(delta_bar(ctx11(2, 0, 1), 1) == Rational(2));
    CHECK(delta_bar(ctx11(1, 0, 1), 1) == Rational(0));
    CHECK(delta_unbar(ctx11(0, -2, 0), 1) == Rational(2));
    CHECK(delta_unbar(ctx11(0, -2, -1), 1) == Rational(0));
}

TEST_CASE("rho on gl(1|1)") {
    auto a = ctx11(1, 0, 0);
    CHECK(rho_bar(a, 2, 1) == Rational(1, 2));
    CHECK(rho_bar(a, 1, 1) == Rational(1, 2));
    CHECK(rho_bar(a, 1, 1) + rho_bar(a, 2, 1) == Rational(1));
    auto b = ctx11(0, -2, -1);
    CHECK(rho_unbar(b, 1, 1) + rho_unbar(b, 2, 1) == Rational(0));  // u outside I'
    Rational total(0);
    for (int r = 1; r <= 2; ++r) total += rwc_square(b, {Direction::contravariant, r, 1});
    CHECK(total == Rational(1));
}

TEST_CASE("reduced Wigner coefficients with phases") {
    auto a = ctx11(1, 0, 1);
    CHECK(rwc(a, {Direction::covariant, 1, {}}) == CoefficientValue(1, Rational(1, 2)));
    auto b = ctx11(1, 0, 0);
    RwcOptions printed;
    printed.phase = PhaseConvention::printed;
    CHECK(rwc(b, {Direction::covariant, 2, 1}, printed) == CoefficientValue(1, Rational(1, 2)));
    CHECK(rwc(ctx11(0, -2, 0), {Direction::contravariant, 2, 1}, printed).sign() == -1);
    CHECK(rwc(b, {Direction::covariant, 2, {}}) == CoefficientValue(1, Rational(1)));
}

TEST_CASE("classical gl(2) values") {
    BranchContext c(Weight({2, 0}, {1, 0}), Weight({1, 0}, {1}));
    CHECK(c_bar(c, 1) + c_bar(c, 2) == Rational(1));
    CHECK(eta_squared_product(Weight({2, 0}, {1, 0}), 1) == Rational(1, 2));
    CHECK(eta_squared_product(Weight({1, 1}, {2, 0}), 1) == Rational(2));
    CHECK(eta_squared_product(Weight({1, 0}, {4}), 1) == Rational(1));
}

TEST_CASE("strict mode reports degenerate roots, continued mode takes the limit") {
    BranchContext c(Weight({1, 2}, {0, 0, 0}), Weight({1, 1}, {0, 0}));
    CHECK_THROWS_AS((void)c_bar(c, 1), DegenerateRoots);
    Rational total(0);
    for (int r : c.sets().ItildePrime) total += c_bar(c, r, EvalMode::continued);
    CHECK(total == Rational(1));
}

TEST_CASE("invalid branches are rejected") {
    CHECK_THROWS_AS(BranchContext(Weight({1, 1}, {1, 0}), Weight({1, 0}, {2})), InvalidBranch);
    CHECK_THROWS_AS(BranchContext(Weight({2, 0}, {0, 1}), Weight({1, 0}, {0})), InvalidBranch);
}
