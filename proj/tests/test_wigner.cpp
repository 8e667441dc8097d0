#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superwig/errors.hpp"
#include "superwig/suites.hpp"

using namespace sw;

namespace {
GTPattern pat(std::initializer_list<std::vector<long>> rows, Shape s) {
    GTPattern p;
    int K = s.size();
    for (auto& r : rows) p.rows.emplace_back(level_shape(s.m, K--), r);
    return p;
}
} // namespace

TEST_CASE("full coefficient into V(2|0)") {
    Shape s{1, 1};
    auto src = pat({{1, 0}, {0}}, s);
    FullWC w = full_wc(Direction::covariant, src, 1, pat({{2, 0}, {1}}, s));
    CHECK(square(w.value) == Rational(1, 2));
    FullWC x = full_wc(Direction::covariant, src, 1, pat({{1, 1}, {1}}, s));
    CHECK(square(x.value) == Rational(1, 2));
}

TEST_CASE("single-level coefficient is the u-absent reduced coefficient") {
    Shape s{1, 1};
    auto src = pat({{1, 0}, {1}}, s);
    BranchContext ctx(src.top(), src.level(1));
    for (int r : ctx.sets().ItildePrime) {
        std::vector<int> shifts{r};
        FullWC w = full_wc(Direction::covariant, src, 2, shifts);
        CHECK(w.value == rwc(ctx, {Direction::covariant, r, {}}));
    }
}

TEST_CASE("columns are normalized on the covariant family") {
    for (Shape s : {Shape{1, 1}, Shape{2, 1}, Shape{1, 2}}) {
        const Family& F = cached_family(s, Direction::covariant, 3);
        for (auto& [L, c] : F.couplings)
            for (auto& src : F.members.at(L).patterns)
                for (int p = 1; p <= s.size(); ++p) {
                    Rational total(0);
                    for (auto& w : full_wc_column(Direction::covariant, src, p)) total += square(w.value);
                    CAPTURE(L.str());
                    CHECK(total == Rational(1));
                }
    }
}

TEST_CASE("non-dominant targets are invalid shifts") {
    Shape s{1, 1};
    auto src = pat({{0, 0}, {0}}, s);
    CHECK_THROWS_AS(full_wc(Direction::contravariant, src, 2, std::vector<int>{1}), InvalidShift);
}

TEST_CASE("form conversion phase") {
    Shape s{1, 1};
    CHECK(form_convert_phase(pat({{1, 0}, {1}}, s)) == 1);
    CHECK(form_convert_phase(pat({{1, 0}, {0}}, s)) == -1);
    for (auto& p : enumerate_patterns(Weight({2, 1}, {2, 1, 1}))) CHECK(form_convert_phase(p) * form_convert_phase(p) == 1);
}

TEST_CASE("eta is constant and classical records match a closed form") {
    const Family& F = cached_family({2, 0}, Direction::covariant, 3);
    for (auto& [L, c] : F.couplings)
        for (int r = 1; r <= 2; ++r) {
            Weight up = shifted(L, r, 1);
            if (!is_dominant(up)) continue;
            EtaReport rep = eta_closed_form_report(F, L, r);
            CAPTURE(L.str());
            CHECK_FALSE(rep.matches.empty());
            CHECK(rep.eta_sq_measured == rep.candidates.at("dim_ratio_raised"));
        }
}

TEST_CASE("eta on gl(1|1) is deterministic") {
    const Family& F = cached_family({1, 1}, Direction::covariant, 3);
    CHECK_THROWS_AS(eta_measured(F, zero_weight({1, 1}), 1), NotRealizable);
    Weight L({1, 1}, {1, 0});
    EtaReport a = eta_closed_form_report(F, L, 1);
    EtaReport b = eta_closed_form_report(F, L, 1);
    CHECK(to_json(a).dump() == to_json(b).dump());
    EtaMeasurement m = eta_measured(F, L, 1);
    CHECK(m.samples > 0);
    CHECK(m.eta_sq == a.eta_sq_measured);
}

TEST_CASE("chain coefficients match the oracle on gl(1|1) couplings") {
    const Family& F = cached_family({1, 1}, Direction::covariant, 3);
    for (auto& [L, c] : F.couplings) {
        CouplingStats st = check_coupling(F, c, WcOptions{}, true);
        CAPTURE(L.str());
        CHECK(st.square_mismatches == 0);
        CHECK(st.gauge_conflicts == 0);
        CHECK(st.gram_failures == 0);
    }
}
