#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superwig/algebra.hpp"
#include "superwig/errors.hpp"

using namespace sw;

namespace {
std::vector<Rational> q(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}
} // namespace

TEST_CASE("grading and level shapes") {
    Shape s{2, 1};
    CHECK(grading(s, 2) == 0);
    CHECK(grading(s, 3) == 1);
    CHECK(level_shape(2, 3) == Shape{2, 1});
    CHECK(level_shape(2, 1) == Shape{1, 0});
    CHECK(child_shape(Shape{2, 1}) == Shape{2, 0});
    CHECK(child_shape(Shape{2, 0}) == Shape{1, 0});
}

TEST_CASE("weights") {
    Weight w({2, 1}, {1, 0, 3});
    CHECK(w.str() == "(1,0|3)");
    CHECK(is_dominant(w));
    CHECK_FALSE(is_dominant(Weight({2, 0}, {0, 1})));
    CHECK(shifted(w, 2, 1).labels == std::vector<long>{1, 1, 3});
    CHECK_THROWS_AS(Weight({1, 1}, {1}), DomainError);
}

TEST_CASE("roots of gl(1|1) examples") {
    CHECK(roots(Weight({1, 1}, {1, 0}), Variant::barred).values == q({-1, 1}));
    CHECK(roots(Weight({1, 1}, {0, -2}), Variant::unbarred).values == q({-1, 2}));
}

TEST_CASE("roots at the zero weight") {
    for (Shape s : {Shape{1, 1}, Shape{2, 1}, Shape{2, 2}, Shape{3, 2}}) {
        auto r = roots(zero_weight(s), Variant::barred);
        for (int i = 1; i <= s.m; ++i) CHECK(r(i) == Rational(i - 1));
        for (int mu = 1; mu <= s.n; ++mu) CHECK(r(s.m + mu) == Rational(s.m + 1 - mu));
    }
    CHECK(roots(zero_weight({2, 1}), Variant::barred).values == q({0, 1, 2}));
    CHECK(roots(zero_weight({2, 1}), Variant::unbarred).values == q({0, -1, 0}));
}

TEST_CASE("barred and unbarred roots convert into each other") {
    for (Weight w : {Weight({1, 1}, {0, -2}), Weight({2, 1}, {0, 0, 0}), Weight({2, 2}, {3, 1, 2, -4}),
                     Weight({3, 0}, {2, 2, -1})}) {
        auto b = roots(w, Variant::barred);
        auto u = roots(w, Variant::unbarred);
        CHECK(convert_barred_unbarred(b).values == u.values);
        CHECK(convert_barred_unbarred(u).values == b.values);
        CHECK(convert_barred_unbarred(convert_barred_unbarred(b)).values == b.values);
    }
}

TEST_CASE("index sets") {
    Weight L({1, 1}, {1, 0});
    auto a = index_sets(L, Weight({1, 0}, {0}), Variant::barred);
    CHECK(a.I0 == IndexSet{1});
    CHECK(a.Ibar0.empty());
    CHECK(a.I1.empty());
    CHECK(a.ItildePrime == IndexSet{2});
    CHECK(a.Itilde == IndexSet{1, 2});
    auto b = index_sets(L, Weight({1, 0}, {1}), Variant::barred);
    CHECK(b.I0.empty());
    CHECK(b.Ibar0 == IndexSet{1});
    CHECK(b.ItildePrime == IndexSet{1, 2});
    CHECK(b.Itilde == IndexSet{2});
    auto c = index_sets(Weight({2, 2}, {2, 1, 1, 0}), Weight({2, 1}, {2, 1, 1}), Variant::barred);
    CHECK(c.I0.empty());
    CHECK(c.Ibar0 == IndexSet{1, 2});
    CHECK(c.I1 == IndexSet{3});
}

TEST_CASE("classical index sets") {
    auto s = index_sets(Weight({3, 0}, {2, 1, 0}), Weight({2, 0}, {1, 1}), Variant::barred);
    CHECK(s.classical);
    CHECK(s.I == IndexSet{1, 2});
    CHECK(s.Itilde == IndexSet{1, 2, 3});
}

TEST_CASE("index sets reject non-branches") {
    CHECK_THROWS_AS(index_sets(Weight({1, 1}, {2, 0}), Weight({1, 0}, {0}), Variant::barred), InvalidBranch);
}
