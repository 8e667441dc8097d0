#include "superwig/suites.hpp"
#include "superwig/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace sw {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<Shape> kOracleShapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}};

// Union-find over states with a parity attached to every edge.
class ParityUnion {
public:
    explicit ParityUnion(std::size_t n) : parent_(n), parity_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }
    // Imposes parity(a) + parity(b) = p; returns false on a contradiction.
    bool relate(std::size_t a, std::size_t b, int p) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return ((pa + pb) % 2) == p;
        parent_[ra] = rb;
        parity_[ra] = (pa + pb + p) % 2;
        return true;
    }

private:
    std::pair<std::size_t, int> find(std::size_t x) {
        int p = 0;
        while (parent_[x] != x) {
            p += parity_[x];
            x = parent_[x];
        }
        return {x, p % 2};
    }
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
};

std::set<std::pair<Weight, Weight>> sectors_of(const RepModule& R) {
    std::set<std::pair<Weight, Weight>> s;
    for (const auto& p : R.patterns)
        for (int K = 2; K <= p.size(); ++K) s.emplace(p.level(K), p.level(K - 1));
    return s;
}

template <class F>
bool evaluate(F&& f, std::size_t& strict, std::size_t& continued, std::size_t& skipped) {
    try {
        f(EvalMode::strict);
        ++strict;
        return true;
    } catch (const DegenerateRoots&) {
    }
    try {
        f(EvalMode::continued);
        ++continued;
        return true;
    } catch (const DegenerateRoots&) {
        ++skipped;
        return false;
    }
}

std::string shape_str(const Shape& s) { return "gl(" + std::to_string(s.m) + "|" + std::to_string(s.n) + ")"; }

} // namespace

CouplingStats check_coupling(const Family& F, const Coupling& c, const WcOptions& opt, bool gram) {
    CouplingStats st;
    const RepModule& R = F.members.at(c.source);
    const int N = F.shape.size();
    std::map<GTPattern, std::size_t> row_of;
    std::size_t rows = 0;
    for (const auto& comp : c.components)
        for (const auto& g : comp.basis) row_of[g.pattern] = rows++;

    using Key = std::tuple<std::size_t, int, int>;  // (row, j, a)
    std::map<Key, CoefficientValue> direct, chain;
    std::size_t offset = 0;
    for (const auto& comp : c.components) {
        for (const auto& e : direct_wc(F.V, R, c.T, comp)) direct[{offset + e.target, e.j, e.source}] = e.value;
        offset += comp.basis.size();
    }
    for (int a = 0; a < R.dim; ++a)
        for (int j = 1; j <= N; ++j)
            for (const auto& w : full_wc_column(F.direction, R.patterns[a], j, opt)) {
                auto it = row_of.find(w.target);
                if (it == row_of.end()) {
                    ++st.outside;
                    continue;
                }
                chain[{it->second, j, a}] = w.value;
            }

    std::set<Key> keys;
    for (auto& [k, v] : direct) keys.insert(k);
    for (auto& [k, v] : chain) keys.insert(k);
    ParityUnion gauge(rows + R.dim);
    for (const Key& k : keys) {
        CoefficientValue d = direct.count(k) ? direct[k] : CoefficientValue::zero();
        CoefficientValue h = chain.count(k) ? chain[k] : CoefficientValue::zero();
        ++st.entries;
        if (square(d) != square(h)) {
            ++st.square_mismatches;
            continue;
        }
        if (d.is_zero()) continue;
        if (d.sign() != h.sign()) ++st.sign_mismatches;
        if (!gauge.relate(std::get<0>(k), rows + std::get<2>(k), d.sign() == h.sign() ? 0 : 1)) ++st.gauge_conflicts;
    }

    if (gram) {
        std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, CoefficientValue>>> by_col;
        for (auto& [k, v] : chain) by_col[{std::get<1>(k), std::get<2>(k)}].emplace_back(std::get<0>(k), v);
        std::map<std::pair<std::size_t, std::size_t>, RadicalSum> G;
        for (auto& [col, entries] : by_col)
            for (auto& [t, x] : entries)
                for (auto& [s, y] : entries)
                    if (t <= s) G[{t, s}].add_product(x, y);
        for (std::size_t t = 0; t < rows; ++t) {
            auto it = G.find({t, t});
            if (it == G.end() || !it->second.is_rational(Rational(1))) ++st.gram_failures;
        }
        for (auto& [ts, sum] : G)
            if (ts.first != ts.second && !sum.is_zero()) ++st.gram_failures;
    }
    return st;
}

SuiteResult suite_sumrules(const SuiteOptions& o) {
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "sumrules";
    const std::vector<Shape> shapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}};
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<long> label(-o.max_label, o.max_label);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    std::size_t weights = 0, contexts = 0, sums = 0, strict = 0, continued = 0, skipped = 0;
    std::vector<std::string> failures;
    for (int s = 0; s < o.samples; ++s) {
        Shape sh = shapes[pick(rng)];
        std::vector<long> l(sh.size());
        for (auto& x : l) x = label(rng);
        std::sort(l.begin(), l.begin() + sh.m, std::greater<>());
        std::sort(l.begin() + sh.m, l.end(), std::greater<>());
        Weight L(sh, l);
        ++weights;
        for (const Weight& lam : branch(L, BranchRule::generic)) {
            BranchContext ctx(L, lam);
            ++contexts;
            const IndexSets& S = ctx.sets();
            const int K = ctx.K();
            auto check = [&](const std::string& what, const std::function<Rational(EvalMode)>& total) {
                Rational value;
                bool ok = evaluate([&](EvalMode m) { value = total(m); }, strict, continued, skipped);
                if (!ok) return;
                ++sums;
                if (value != Rational(1)) failures.push_back(what + " at " + L.str() + " > " + lam.str() + " = " + value.str());
            };
            check("sum c_bar", [&](EvalMode m) {
                Rational t(0);
                for (int r : S.ItildePrime) t += c_bar(ctx, r, m);
                return t;
            });
            check("sum c", [&](EvalMode m) {
                Rational t(0);
                for (int r : S.Itilde) t += c_unbar(ctx, r, m);
                return t;
            });
            for (int u : S.I)
                check("sum rho_bar u=" + std::to_string(u), [&](EvalMode m) {
                    Rational t(0);
                    for (int r = 1; r <= K; ++r) t += rho_bar(ctx, r, u, m);
                    return t;
                });
            for (int u : S.Iprime)
                check("sum rho u=" + std::to_string(u), [&](EvalMode m) {
                    Rational t(0);
                    for (int r = 1; r <= K; ++r) t += rho_unbar(ctx, r, u, m);
                    return t;
                });
        }
    }
    res.seconds = since(t0);
    std::ostringstream os;
    os << weights << " weights, " << contexts << " branches, " << sums << " sums exact (" << strict << " strict, "
       << continued << " continued, " << skipped << " poles skipped), " << failures.size() << " failures";
    if (!failures.empty()) os << "; first: " << failures.front();
    res.pass = failures.empty() && weights >= 200 && res.seconds < 10.0;
    res.detail = os.str();
    return res;
}

SuiteResult suite_oracle_c(const SuiteOptions& o) {
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "oracle-c";
    std::size_t compared = 0, degenerate = 0, members = 0;
    std::vector<std::string> failures;
    for (const Shape& sh : kOracleShapes)
        for (Direction d : {Direction::covariant, Direction::contravariant}) {
            const Family& F = cached_family(sh, d, o.kmax);
            const Variant v = d == Direction::covariant ? Variant::barred : Variant::unbarred;
            for (const auto& [w, R] : F.members) {
                ++members;
                for (int K = 2; K <= sh.size(); ++K)
                    for (const auto& sv : projector_invariants(R, K, v)) {
                        if (sv.degenerate) {
                            ++degenerate;
                            continue;
                        }
                        BranchContext ctx(sv.Lambda, sv.lambda);
                        try {
                            for (int r = 1; r <= K; ++r) {
                                Rational f = v == Variant::barred ? c_bar(ctx, r) : c_unbar(ctx, r);
                                ++compared;
                                if (f != sv.c.at(r))
                                    failures.push_back(direction_name(d) + " " + sv.Lambda.str() + " > " + sv.lambda.str() +
                                                       " r=" + std::to_string(r) + ": " + f.str() + " vs " + sv.c.at(r).str());
                            }
                        } catch (const DegenerateRoots&) {
                            ++degenerate;
                        }
                    }
            }
        }
    res.seconds = since(t0);
    std::ostringstream os;
    os << members << " modules, " << compared << " eigenvalues equal to closed forms, " << degenerate
       << " degenerate sectors skipped, " << failures.size() << " failures";
    if (!failures.empty()) os << "; first: " << failures.front();
    res.pass = failures.empty() && compared > 0 && res.seconds < 60.0;
    res.detail = os.str();
    return res;
}

SuiteResult suite_oracle_rho(const SuiteOptions& o) {
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "oracle-rho";
    std::size_t compared = 0, degenerate = 0;
    std::vector<std::string> failures;
    for (const Shape& sh : kOracleShapes)
        for (Direction d : {Direction::covariant, Direction::contravariant}) {
            const Family& F = cached_family(sh, d, o.kmax);
            const Variant v = d == Direction::covariant ? Variant::barred : Variant::unbarred;
            for (const auto& [w, R] : F.members)
                for (int K = 2; K <= sh.size(); ++K)
                    for (const auto& sv : projector_invariants(R, K, v)) {
                        if (sv.degenerate) {
                            ++degenerate;
                            continue;
                        }
                        BranchContext ctx(sv.Lambda, sv.lambda);
                        try {
                            for (auto& [ru, val] : sv.rho) {
                                Rational f = rwc_square(ctx, {d, ru.first, ru.second});
                                ++compared;
                                if (f != val)
                                    failures.push_back(direction_name(d) + " " + sv.Lambda.str() + " > " + sv.lambda.str() +
                                                       " r=" + std::to_string(ru.first) + " u=" + std::to_string(ru.second) +
                                                       ": " + f.str() + " vs " + val.str());
                            }
                        } catch (const DegenerateRoots&) {
                            ++degenerate;
                        }
                    }
        }
    // The gl(1|1) values for Lambda = (1|0), lambda = (0).
    bool pinned = false;
    {
        const Family& F = cached_family({1, 1}, Direction::covariant, o.kmax);
        Weight L({1, 1}, {1, 0}), l({1, 0}, {0});
        for (const auto& sv : projector_invariants(F.members.at(L), 2, Variant::barred))
            if (sv.lambda == l && !sv.degenerate) {
                BranchContext ctx(L, l);
                Rational half(1, 2);
                pinned = sv.rho.at({1, 1}) == half && sv.rho.at({2, 1}) == half && rho_bar(ctx, 1, 1) == half &&
                         rho_bar(ctx, 2, 1) == half;
            }
    }
    res.seconds = since(t0);
    std::ostringstream os;
    os << compared << " sandwich eigenvalues equal to closed forms, " << degenerate << " degenerate sectors skipped, "
       << failures.size() << " failures; gl(1|1) rho_11 = rho_21 = 1/2: " << (pinned ? "yes" : "no");
    if (!failures.empty()) os << "; first: " << failures.front();
    res.pass = failures.empty() && pinned && compared > 0 && res.seconds < 60.0;
    res.detail = os.str();
    return res;
}

SuiteResult suite_orthonormality(const SuiteOptions& o) {
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "orthonormality";
    CouplingStats total;
    std::size_t couplings = 0;
    WcOptions opt;
    for (const Shape& sh : kOracleShapes) {
        const Family& F = cached_family(sh, Direction::covariant, o.kmax);
        for (const auto& [src, c] : F.couplings) {
            CouplingStats s = check_coupling(F, c, opt, true);
            ++couplings;
            total.entries += s.entries;
            total.square_mismatches += s.square_mismatches;
            total.outside += s.outside;
            total.gauge_conflicts += s.gauge_conflicts;
            total.gram_failures += s.gram_failures;
        }
    }
    res.seconds = since(t0);
    std::ostringstream os;
    os << couplings << " couplings, " << total.entries << " coefficients; Gram failures " << total.gram_failures
       << ", chain vs direct square mismatches " << total.square_mismatches << ", targets outside decomposition "
       << total.outside << ", sign conflicts after GT gauge " << total.gauge_conflicts;
    res.pass = couplings > 0 && total.gram_failures == 0 && total.square_mismatches == 0 && total.outside == 0 &&
               total.gauge_conflicts == 0;
    res.detail = os.str();
    return res;
}

SuiteResult suite_positivity(const SuiteOptions& o) {
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "positivity";
    std::size_t checked = 0, strict = 0, continued = 0, skipped = 0;
    std::vector<std::string> violations;
    for (const Shape& sh : kOracleShapes)
        for (Direction d : {Direction::covariant, Direction::contravariant}) {
            const Family& F = cached_family(sh, d, o.kmax);
            for (const auto& [w, R] : F.members)
                for (const auto& [L, l] : sectors_of(R)) {
                    BranchContext ctx(L, l);
                    const int K = ctx.K();
                    auto probe = [&](RWCKey key) {
                        Rational v;
                        bool ok = evaluate(
                            [&](EvalMode m) {
                                RwcOptions ro;
                                ro.mode = m;
                                v = rwc_square(ctx, key, ro);
                            },
                            strict, continued, skipped);
                        if (!ok) return;
                        ++checked;
                        if (v.sign() < 0)
                            violations.push_back(direction_name(d) + " " + L.str() + " > " + l.str() + " r=" +
                                                 std::to_string(key.r) + (key.u ? " u=" + std::to_string(*key.u) : "") +
                                                 " = " + v.str());
                    };
                    for (int r = 1; r <= K; ++r) {
                        probe({d, r, {}});
                        for (int u = 1; u < K; ++u) probe({d, r, u});
                    }
                }
        }
    res.seconds = since(t0);
    std::ostringstream os;
    os << checked << " squared coefficients (" << strict << " strict, " << continued << " continued, " << skipped
       << " poles skipped), " << violations.size() << " negative";
    if (!violations.empty()) os << "; first: " << violations.front();
    res.pass = violations.empty() && checked > 0;
    res.detail = os.str();
    return res;
}

SuiteResult suite_nonunitary(const SuiteOptions&) {
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "nonunitary";
    std::ostringstream os;
    try {
        BranchContext ctx(Weight({1, 1}, {2, 0}), Weight({1, 0}, {1}));
        Rational c1 = c_unbar(ctx, 1), c2 = c_unbar(ctx, 2);
        os << "gl(1|1) (2|0) > (1): c_1 = " << c1 << ", c_2 = " << c2 << ", sum = " << (c1 + c2);
        res.pass = c1 == Rational(-1) && c2 == Rational(2) && c1 + c2 == Rational(1);
        CoefficientValue v = rwc(ctx, {Direction::contravariant, 1, {}});
        os << "; rwc(r=1) = " << v;
        res.pass = res.pass && square(v) == Rational(-1);
    } catch (const DomainError& e) {
        os << e.code() << ": " << e.what();
        res.pass = false;
    }
    res.seconds = since(t0);
    res.detail = os.str();
    return res;
}

SuiteResult suite_symmetry(const SuiteOptions& o) {
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "symmetry";
    std::vector<Shape> shapes = kOracleShapes;
    shapes.push_back({2, 0});
    shapes.push_back({3, 0});
    std::size_t records = 0, not_realizable = 0, classical_records = 0, classical_unmatched = 0;
    std::vector<std::string> failures;
    Json reports = Json::array();
    for (const Shape& sh : shapes) {
        const Family& F = cached_family(sh, Direction::covariant, o.kmax);
        for (const auto& [L, c] : F.couplings)
            for (int r = 1; r <= sh.size(); ++r) {
                Weight up = shifted(L, r, 1);
                bool present = std::any_of(c.components.begin(), c.components.end(),
                                           [&](const Component& comp) { return comp.weight == up; });
                if (!present) continue;
                try {
                    EtaReport rep = eta_closed_form_report(F, L, r);
                    ++records;
                    if (sh.n == 0) {
                        ++classical_records;
                        if (rep.matches.empty()) ++classical_unmatched;
                    }
                    reports.push_back(to_json(rep));
                } catch (const NotRealizable&) {
                    ++not_realizable;
                } catch (const Inconsistent& e) {
                    failures.push_back(L.str() + " r=" + std::to_string(r) + ": " + e.what());
                }
            }
    }
    res.seconds = since(t0);
    std::ostringstream os;
    os << records << " records with constant eta^2, " << not_realizable << " not realizable, " << failures.size()
       << " inconsistent; classical records " << classical_records << ", without a matching candidate "
       << classical_unmatched;
    if (!failures.empty()) os << "; first: " << failures.front();
    res.pass = failures.empty() && records > 0 && classical_records > 0 && classical_unmatched == 0;
    res.detail = os.str();
    res.artifact = reports;
    return res;
}

SuiteResult suite_classical(const SuiteOptions& o) {
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "classical";
    CouplingStats total;
    std::size_t couplings = 0;
    for (const Shape& sh : {Shape{2, 0}, Shape{3, 0}}) {
        const Family& F = cached_family(sh, Direction::covariant, o.kmax);
        for (const auto& [src, c] : F.couplings) {
            CouplingStats s = check_coupling(F, c, WcOptions{EvalMode::strict}, true);
            ++couplings;
            total.entries += s.entries;
            total.square_mismatches += s.square_mismatches;
            total.outside += s.outside;
            total.sign_mismatches += s.sign_mismatches;
            total.gauge_conflicts += s.gauge_conflicts;
            total.gram_failures += s.gram_failures;
        }
    }
    res.seconds = since(t0);
    std::ostringstream os;
    os << couplings << " gl(2), gl(3) couplings, " << total.entries << " coefficients; value mismatches "
       << total.square_mismatches + total.sign_mismatches << " (squares " << total.square_mismatches << ", signs "
       << total.sign_mismatches << "), Gram failures " << total.gram_failures;
    res.pass = couplings > 0 && total.square_mismatches == 0 && total.sign_mismatches == 0 && total.outside == 0 &&
               total.gram_failures == 0;
    res.detail = os.str();
    return res;
}

SuiteResult suite_phases(const SuiteOptions& o) {
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "phases";
    std::size_t gauge_conflicts = 0, printed_conflicts = 0, entries = 0, squares = 0;
    Json per_family = Json::array();
    for (const Shape& sh : kOracleShapes)
        for (Direction d : {Direction::covariant, Direction::contravariant}) {
            const Family& F = cached_family(sh, d, o.kmax);
            std::size_t g = 0, p = 0;
            for (const auto& [src, c] : F.couplings) {
                CouplingStats a = check_coupling(F, c, WcOptions{EvalMode::continued, PhaseConvention::gauge_consistent}, false);
                CouplingStats b = check_coupling(F, c, WcOptions{EvalMode::continued, PhaseConvention::printed}, false);
                g += a.gauge_conflicts;
                p += b.gauge_conflicts;
                entries += a.entries;
                squares += a.square_mismatches;
            }
            gauge_conflicts += g;
            printed_conflicts += p;
            Json j;
            j["family"] = shape_str(sh) + " " + direction_name(d);
            j["gauge_consistent_conflicts"] = g;
            j["printed_conflicts"] = p;
            per_family.push_back(j);
        }
    res.seconds = since(t0);
    std::ostringstream os;
    os << entries << " coefficients; sign conflicts after GT gauge: gauge-consistent rule " << gauge_conflicts
       << ", printed rule " << printed_conflicts << "; square mismatches " << squares;
    res.pass = gauge_conflicts == 0 && squares == 0;
    res.detail = os.str();
    res.artifact = per_family;
    return res;
}

std::vector<std::string> suite_names() {
    return {"sumrules", "oracle-c", "oracle-rho", "orthonormality", "positivity",
            "nonunitary", "symmetry", "classical", "phases"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
    if (name == "sumrules") return suite_sumrules(o);
    if (name == "oracle-c") return suite_oracle_c(o);
    if (name == "oracle-rho") return suite_oracle_rho(o);
    if (name == "orthonormality") return suite_orthonormality(o);
    if (name == "positivity") return suite_positivity(o);
    if (name == "nonunitary") return suite_nonunitary(o);
    if (name == "symmetry") return suite_symmetry(o);
    if (name == "classical") return suite_classical(o);
    if (name == "phases") return suite_phases(o);
    throw DomainError("unknown suite '" + name + "'", "UsageError");
}

} // namespace sw
