#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superwig/errors.hpp"
#include "superwig/family.hpp"
#include "superwig/oracle.hpp"

#include <set>

using namespace sw;

TEST_CASE("vector module") {
    for (Shape s : {Shape{1, 1}, Shape{2, 1}, Shape{1, 2}, Shape{2, 2}}) {
        RepModule V = vector_module(s);
        CHECK(V.dim == s.size());
        CHECK(supercommutation_holds(V));
        for (int p = 1; p <= s.size(); ++p) {
            std::vector<long> e(s.size(), 0);
            e[p - 1] = 1;
            CHECK(V.weights[p - 1] == e);
        }
    }
}

TEST_CASE("dual module") {
    RepModule V = vector_module({2, 1});
    RepModule D = dual_module(V);
    CHECK(supercommutation_holds(D));
    for (int i = 0; i < V.dim; ++i) {
        std::vector<long> neg = V.weights[i];
        for (auto& x : neg) x = -x;
        CHECK(D.weights[i] == neg);
    }
    RepModule DD = dual_module(D);
    CHECK(std::multiset<std::vector<long>>(DD.weights.begin(), DD.weights.end()) ==
          std::multiset<std::vector<long>>(V.weights.begin(), V.weights.end()));
    CHECK(supercommutation_holds(dual_module(V, true)));
}

TEST_CASE("graded tensor product") {
    RepModule V = vector_module({1, 1});
    RepModule T = graded_tensor(V, V);
    CHECK(T.dim == 4);
    CHECK(supercommutation_holds(T));
    CHECK(T.weights[1] == std::vector<long>{1, 1});
    CHECK(supercommutation_holds(graded_tensor(dual_module(vector_module({2, 1})), vector_module({2, 1}))));
}

TEST_CASE("highest weight vectors of V x V(1|0)") {
    RepModule V = vector_module({1, 1});
    auto hws = highest_weight_vectors(graded_tensor(V, V));
    std::set<std::vector<long>> w;
    for (auto& h : hws) w.insert(h.weight);
    CHECK(w == std::set<std::vector<long>>{{2, 0}, {1, 1}});
    auto single = highest_weight_vectors(V);
    REQUIRE(single.size() == 1);
    CHECK(single[0].weight == std::vector<long>{1, 0});
}

TEST_CASE("V* x V(Lambda) has one highest weight per dominant Lambda - e_r") {
    const Family& F = cached_family({2, 1}, Direction::covariant, 2);
    RepModule D = dual_module(F.V, true);
    for (auto& [w, R] : F.members) {
        std::size_t expected = 0;
        for (int r = 1; r <= w.size(); ++r)
            if (is_dominant(shifted(w, r, -1))) ++expected;
        CAPTURE(w.str());
        CHECK(highest_weight_vectors(graded_tensor(D, R)).size() <= expected);
    }
}

TEST_CASE("GT bases") {
    RepModule V = vector_module({1, 1});
    RepModule T = graded_tensor(V, V);
    for (auto& h : highest_weight_vectors(T)) {
        auto basis = gt_basis(T, h.vec);
        CHECK(basis.size() == 2);
    }
    auto hv = highest_weight_vectors(V);
    CHECK(gt_basis(V, hv[0].vec).size() == 2);
}

TEST_CASE("realized family members satisfy the characteristic identities") {
    for (Shape s : {Shape{1, 1}, Shape{2, 1}, Shape{1, 2}})
        for (Direction d : {Direction::covariant, Direction::contravariant}) {
            const Family& F = cached_family(s, d, 2);
            for (auto& [w, R] : F.members) {
                CAPTURE(w.str());
                CHECK(supercommutation_holds(R));
                CHECK(projector_identities_hold(R, d == Direction::covariant ? Variant::barred : Variant::unbarred));
            }
        }
}

TEST_CASE("projector invariants on V(1|0)") {
    const Family& F = cached_family({1, 1}, Direction::covariant, 1);
    const RepModule& R = F.members.at(Weight({1, 1}, {1, 0}));
    bool seen = false;
    for (auto& sv : projector_invariants(R, 2, Variant::barred))
        if (sv.lambda == Weight({1, 0}, {1})) {
            seen = true;
            CHECK(sv.c.at(1) == Rational(1, 2));
            CHECK(sv.c.at(2) == Rational(1, 2));
        }
    CHECK(seen);
}

TEST_CASE("direct coupling coefficients in V x V(1|0)") {
    const Family& F = cached_family({1, 1}, Direction::covariant, 2);
    const Coupling& c = F.couplings.at(Weight({1, 1}, {1, 0}));
    const RepModule& R = F.members.at(c.source);
    int src = -1;
    for (int a = 0; a < R.dim; ++a)
        if (R.patterns[a].level(1).labels[0] == 0) src = a;
    REQUIRE(src >= 0);
    std::map<Weight, Rational> squares;
    for (auto& comp : c.components) {
        std::map<int, Rational> col_norm;
        for (auto& e : direct_wc(F.V, R, c.T, comp)) {
            if (e.j == 1 && e.source == src && comp.basis[e.target].pattern.level(1).labels[0] == 1)
                squares[comp.weight] = square(e.value);
        }
    }
    CHECK(squares.at(Weight({1, 1}, {2, 0})) == Rational(1, 2));
    CHECK(squares.at(Weight({1, 1}, {1, 1})) == Rational(1, 2));
}

TEST_CASE("nullspace returns primitive integer columns") {
    RationalMatrix A(1, 3);
    A << Rational(2), Rational(-4), Rational(6);
    RationalMatrix N = nullspace(A);
    CHECK(N.cols() == 2);
    CHECK((A * N).isZero());
}
