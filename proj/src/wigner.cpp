#include "superwig/wigner.hpp"
#include "superwig/errors.hpp"

#include <functional>
#include <tuple>

namespace sw {

FullWC full_wc(Direction d, const GTPattern& source, int p, const std::vector<int>& shifts, const WcOptions& opt) {
    const int N = source.size();
    if (p < 1 || p > N) throw DomainError("vector index " + std::to_string(p) + " out of range");
    if (static_cast<int>(shifts.size()) != N - p + 1)
        throw DomainError("expected " + std::to_string(N - p + 1) + " shifts, got " + std::to_string(shifts.size()));
    const long step = d == Direction::covariant ? 1 : -1;
    FullWC out{d, source, source, p, CoefficientValue::one()};
    for (int K = p; K <= N; ++K) {
        int r = shifts[K - p];
        if (r < 1 || r > K) throw InvalidShift("shift " + std::to_string(r) + " at level " + std::to_string(K));
        out.target.level(K) = shifted(source.level(K), r, step);
        if (!is_dominant(out.target.level(K)))
            throw InvalidShift(out.target.level(K).str() + " is not dominant");
    }
    for (int K = std::max(p, 2); K <= N; ++K)
        if (!valid_branch(out.target.level(K), out.target.level(K - 1)))
            throw InvalidShift(out.target.level(K - 1).str() + " is not a branch of " + out.target.level(K).str());
    RwcOptions ro{opt.mode, opt.phase, opt.rule};
    for (int K = std::max(p, 2); K <= N; ++K) {
        BranchContext ctx(source.level(K), source.level(K - 1));
        RWCKey key{d, shifts[K - p], {}};
        if (K > p) key.u = shifts[K - 1 - p];
        out.value = mul(out.value, rwc(ctx, key, ro));
        if (out.value.is_zero()) break;
    }
    return out;
}

FullWC full_wc(Direction d, const GTPattern& source, int p, const GTPattern& target, const WcOptions& opt) {
    const int N = source.size();
    FullWC zero{d, source, target, p, CoefficientValue::zero()};
    if (target.size() != N) return zero;
    const long step = d == Direction::covariant ? 1 : -1;
    for (int K = 1; K < p; ++K)
        if (target.level(K) != source.level(K)) return zero;
    std::vector<int> shifts;
    for (int K = p; K <= N; ++K) {
        const Weight& a = source.level(K);
        const Weight& b = target.level(K);
        if (a.shape != b.shape) return zero;
        int pos = 0;
        for (int q = 1; q <= K; ++q) {
            long diff = b(q) - a(q);
            if (diff == 0) continue;
            if (diff != step || pos) return zero;
            pos = q;
        }
        if (!pos) return zero;
        shifts.push_back(pos);
    }
    FullWC out = full_wc(d, source, p, shifts, opt);
    out.target = target;
    return out;
}

std::vector<FullWC> full_wc_column(Direction d, const GTPattern& source, int p, const WcOptions& opt) {
    std::vector<FullWC> out;
    const int N = source.size();
    std::vector<int> shifts;
    std::function<void(int)> rec = [&](int K) {
        if (K > N) {
            try {
                FullWC w = full_wc(d, source, p, shifts, opt);
                if (!w.value.is_zero()) out.push_back(std::move(w));
            } catch (const InvalidShift&) {
            }
            return;
        }
        for (int r = 1; r <= K; ++r) {
            shifts.push_back(r);
            rec(K + 1);
            shifts.pop_back();
        }
    };
    rec(p);
    return out;
}

int form_convert_phase(const GTPattern& p) { return pattern_parity(p) ? -1 : 1; }

namespace {

using EntryKey = std::tuple<int, GTPattern, GTPattern>;  // (i, alpha, beta)

const Component* find_component(const std::vector<Component>& comps, const Weight& w) {
    for (const auto& c : comps)
        if (c.weight == w) return &c;
    return nullptr;
}

} // namespace

EtaMeasurement eta_measured(const Family& cov, const Weight& Lambda, int r) {
    if (cov.direction != Direction::covariant) throw DomainError("eta is measured on the covariant family");
    Weight up = shifted(Lambda, r, 1);
    auto cit = cov.couplings.find(Lambda);
    if (cit == cov.couplings.end() || !cov.members.count(up))
        throw NotRealizable(Lambda.str() + " and " + up.str() + " are not both realized in the family");
    const RepModule& RL = cov.members.at(Lambda);
    const RepModule& RU = cov.members.at(up);
    const Component* ca = find_component(cit->second.components, up);
    if (!ca) throw NotRealizable(up.str() + " does not occur in V x " + Lambda.str());

    std::map<EntryKey, CoefficientValue> A, B;
    for (const auto& e : direct_wc(cov.V, RL, cit->second.T, *ca))
        A[{e.j, RL.patterns[e.source], ca->basis[e.target].pattern}] = e.value;

    RepModule Vs = dual_module(vector_module(cov.shape), true);
    RepModule T = graded_tensor(Vs, RU);
    std::vector<WeightedVector> hws;
    for (auto& h : highest_weight_vectors(T))
        if (h.weight == Lambda.labels) hws.push_back(h);
    if (hws.size() != 1) throw NotRealizable(Lambda.str() + " does not occur once in V* x " + up.str());
    Component cb{Lambda, gt_basis(T, hws.front().vec)};
    for (const auto& g : cb.basis)
        if (norm(T, g.vec).is_zero()) throw NotRealizable("null GT vector for " + Lambda.str() + " in V* x " + up.str());
    for (const auto& e : direct_wc(Vs, RU, T, cb))
        B[{e.j, cb.basis[e.target].pattern, RU.patterns[e.source]}] = e.value;

    EtaMeasurement m{Lambda, r, Rational(0), 0, 0};
    bool first = true;
    for (auto& [k, a] : A) {
        auto it = B.find(k);
        if (it == B.end()) throw Inconsistent("covariant coefficient without a contravariant partner");
        Rational q = a.radicand() / it->second.radicand();
        int s = a.sign() * it->second.sign();
        if (first) {
            m.eta_sq = q;
            m.eta_sign = s;
            first = false;
        } else {
            if (q != m.eta_sq) throw Inconsistent("eta varies over states for " + Lambda.str());
            if (s != m.eta_sign) m.eta_sign = 0;
        }
        ++m.samples;
    }
    if (A.size() != B.size()) throw Inconsistent("contravariant coefficient without a covariant partner");
    if (first) throw NotRealizable("no coupling coefficients for " + Lambda.str());
    return m;
}

std::map<std::string, Rational> eta_candidates(const Weight& Lambda, int r) {
    std::map<std::string, Rational> c;
    Weight up = shifted(Lambda, r, 1);
    Weight down = shifted(Lambda, r, -1);
    auto attempt = [&](const std::string& name, const std::function<Rational()>& f) {
        try {
            c[name] = f();
        } catch (const DomainError&) {
        }
    };
    attempt("product_at_Lambda", [&] { return eta_squared_product(Lambda, r); });
    attempt("product_at_raised", [&] { return eta_squared_product(up, r); });
    attempt("dim_ratio_lowered", [&] { return even_dimension(down) / even_dimension(Lambda); });
    attempt("dim_ratio_inverse", [&] { return even_dimension(Lambda) / even_dimension(up); });
    attempt("dim_ratio_raised", [&] { return even_dimension(up) / even_dimension(Lambda); });
    attempt("delta_ratio", [&] {
        // Lambda and Lambda + eps_r as neighbouring branches of one parent with an extra odd index.
        const Shape s = Lambda.shape;
        Shape ps{s.m, s.n + 1};
        std::vector<long> labels;
        for (int i = 1; i <= s.m; ++i) labels.push_back(Lambda(i) + 1);
        if (s.n == 0) {
            labels.push_back(0);
        } else {
            labels.push_back(Lambda(s.m + 1) + 1);
            for (int mu = 1; mu <= s.n; ++mu) labels.push_back(Lambda(s.m + mu));
        }
        Weight parent(ps, labels);
        BranchContext lower = BranchContext::unchecked(parent, Lambda);
        BranchContext upper = BranchContext::unchecked(parent, up);
        return delta_bar(lower, r, EvalMode::continued) / delta_unbar(upper, r, EvalMode::continued);
    });
    return c;
}

EtaReport eta_closed_form_report(const Family& cov, const Weight& Lambda, int r) {
    EtaMeasurement m = eta_measured(cov, Lambda, r);
    EtaReport rep{Lambda, r, m.eta_sq, eta_candidates(Lambda, r), {}};
    for (auto& [name, v] : rep.candidates)
        if (v == rep.eta_sq_measured) rep.matches.push_back(name);
    return rep;
}

} // namespace sw
