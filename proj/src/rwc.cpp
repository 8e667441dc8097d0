#include "superwig/rwc.hpp"
#include "superwig/errors.hpp"

namespace sw {

BranchContext::BranchContext(Weight Lambda, Weight lambda) : Lambda_(std::move(Lambda)), lambda_(std::move(lambda)) {
    if (!valid_branch(Lambda_, lambda_))
        throw InvalidBranch(lambda_.str() + " is not a branch of " + Lambda_.str());
    init();
}

BranchContext BranchContext::unchecked(Weight Lambda, Weight lambda) {
    BranchContext c;
    c.Lambda_ = std::move(Lambda);
    c.lambda_ = std::move(lambda);
    c.init();
    return c;
}

void BranchContext::init() {
    sets_ = index_sets(Lambda_, lambda_, Variant::barred);
    if (!sets_.classical) {
        IndexSets other = index_sets(Lambda_, lambda_, Variant::unbarred);
        if (other.I0 != sets_.I0 || other.Ibar0 != sets_.Ibar0)
            throw Inconsistent("barred and unbarred index sets differ for " + Lambda_.str());
    }
    abar_ = sw::roots(Lambda_, Variant::barred, Level::algebra);
    a_ = sw::roots(Lambda_, Variant::unbarred, Level::algebra);
    abar0_ = sw::roots(lambda_, Variant::barred, Level::subalgebra);
    a0_ = sw::roots(lambda_, Variant::unbarred, Level::subalgebra);
}

void LeadingTerm::mul(const Rational& v, int slope) {
    if (!v.is_zero()) {
        coeff_ *= v;
    } else if (mode_ == EvalMode::strict || slope == 0) {
        zero_ = true;
    } else {
        ++order_;
        coeff_ *= Rational(slope);
    }
}

void LeadingTerm::div(const Rational& v, int slope) {
    if (!v.is_zero()) {
        coeff_ /= v;
    } else if (mode_ == EvalMode::strict || slope == 0) {
        throw DegenerateRoots("vanishing denominator factor");
    } else {
        --order_;
        coeff_ /= Rational(slope);
    }
}

void LeadingTerm::absorb(const LeadingTerm& o) {
    order_ += o.order_;
    coeff_ *= o.coeff_;
    zero_ = zero_ || o.zero_;
}

Rational LeadingTerm::value() const {
    if (zero_ || order_ > 0) return Rational(0);
    if (order_ < 0) throw DegenerateRoots("pole in the continued value");
    return coeff_;
}

namespace {

struct View {
    const BranchContext& ctx;
    Variant v;
    const RootVector& A;
    const RootVector& A0;
    const IndexSet& inner;  // I' (barred) or I (unbarred)
    const IndexSet& tilde;  // inner with K appended
    const IndexSet& usup;   // I (barred) or I' (unbarred)
    const IndexSet& fixed;  // I-bar0 (barred) or I0 (unbarred): diagonal-only u

    View(const BranchContext& c, Variant var)
        : ctx(c), v(var), A(c.roots(var)), A0(c.subroots(var)),
          inner(var == Variant::barred ? c.sets().Iprime : c.sets().I),
          tilde(var == Variant::barred ? c.sets().ItildePrime : c.sets().Itilde),
          usup(var == Variant::barred ? c.sets().I : c.sets().Iprime),
          fixed(var == Variant::barred ? c.sets().Ibar0 : c.sets().I0) {}

    int s(int p) const { return root_slope(v, ctx.grading(p)); }
    int sg(int k) const { return ctx.gsign(k); }
    int parity_sign() const { return inner.size() % 2 ? -1 : 1; }

    // A_r - A0_k - (-1)^(k)
    void shifted_factor(LeadingTerm& t, int r, int k, bool divide) const {
        Rational val = A(r) - A0(k) - Rational(sg(k));
        int slope = s(r) - s(k);
        divide ? t.div(val, slope) : t.mul(val, slope);
    }
    // A0_u - A0_k - (-1)^(k)
    void sub_factor(LeadingTerm& t, int u, int k, bool divide) const {
        Rational val = A0(u) - A0(k) - Rational(sg(k));
        int slope = s(u) - s(k);
        divide ? t.div(val, slope) : t.mul(val, slope);
    }
};

LeadingTerm c_term(const View& w, int r, EvalMode mode) {
    LeadingTerm t(mode);
    if (!contains(w.tilde, r)) {
        t.mul(Rational(0), 0);
        return t;
    }
    for (int k : w.inner) w.shifted_factor(t, r, k, false);
    for (int k : w.tilde)
        if (k != r) t.div(w.A(r) - w.A(k), w.s(r) - w.s(k));
    return t;
}

LeadingTerm delta_term(const View& w, int u, EvalMode mode) {
    LeadingTerm t(mode);
    if (!contains(w.usup, u)) {
        t.mul(Rational(0), 0);
        return t;
    }
    t.scale(Rational(w.parity_sign()));
    for (int k : w.tilde) t.mul(w.A(k) - w.A0(u), w.s(k) - w.s(u));
    for (int k : w.inner)
        if (k != u) w.sub_factor(t, u, k, true);
    return t;
}

LeadingTerm rho_term(const View& w, int r, int u, EvalMode mode) {
    LeadingTerm t(mode);
    const BranchContext& ctx = w.ctx;
    if (!contains(w.usup, u)) {
        t.mul(Rational(0), 0);
        return t;
    }
    const bool even_u = ctx.super() && ctx.grading(u) == 0;
    if (!contains(w.tilde, r)) {
        if (even_u && r == u) {
            long d = w.v == Variant::barred ? 1 : -1;
            BranchContext moved = BranchContext::unchecked(ctx.Lambda(), shifted(ctx.lambda(), u, d));
            t = c_term(View(moved, w.v), u, mode);
            t.absorb(delta_term(w, u, mode));
            return t;
        }
        t.mul(Rational(0), 0);
        return t;
    }
    t.scale(Rational(w.parity_sign()));
    for (int k : w.tilde) {
        if (k == r) continue;
        t.mul(w.A(k) - w.A0(u), w.s(k) - w.s(u));
        t.div(w.A(r) - w.A(k), w.s(r) - w.s(k));
    }
    if (even_u) {
        t.div(w.A(r) - w.A0(u) + Rational(1), w.s(r) - w.s(u));
        for (int k : w.inner) w.shifted_factor(t, r, k, false);
        for (int k : w.inner)
            if (k != u) w.sub_factor(t, u, k, true);
    } else {
        for (int k : w.inner) {
            if (k == u) continue;
            w.shifted_factor(t, r, k, false);
            w.sub_factor(t, u, k, true);
        }
    }
    return t;
}

void check_index(const BranchContext& ctx, int p, int limit, const char* name) {
    if (p < 1 || p > limit)
        throw DomainError(std::string(name) + " = " + std::to_string(p) + " out of range 1.." + std::to_string(limit) +
                          " for " + ctx.Lambda().str());
}

int S(long x) { return x >= 0 ? 1 : -1; }

} // namespace

LeadingTerm c_bar_term(const BranchContext& ctx, int r, EvalMode mode) { return c_term(View(ctx, Variant::barred), r, mode); }
LeadingTerm c_unbar_term(const BranchContext& ctx, int r, EvalMode mode) { return c_term(View(ctx, Variant::unbarred), r, mode); }
LeadingTerm delta_bar_term(const BranchContext& ctx, int u, EvalMode mode) { return delta_term(View(ctx, Variant::barred), u, mode); }
LeadingTerm delta_unbar_term(const BranchContext& ctx, int u, EvalMode mode) { return delta_term(View(ctx, Variant::unbarred), u, mode); }
LeadingTerm rho_bar_term(const BranchContext& ctx, int r, int u, EvalMode mode) { return rho_term(View(ctx, Variant::barred), r, u, mode); }
LeadingTerm rho_unbar_term(const BranchContext& ctx, int r, int u, EvalMode mode) { return rho_term(View(ctx, Variant::unbarred), r, u, mode); }

Rational c_bar(const BranchContext& ctx, int r, EvalMode mode) { return c_bar_term(ctx, r, mode).value(); }
Rational c_unbar(const BranchContext& ctx, int r, EvalMode mode) { return c_unbar_term(ctx, r, mode).value(); }
Rational delta_bar(const BranchContext& ctx, int u, EvalMode mode) { return delta_bar_term(ctx, u, mode).value(); }
Rational delta_unbar(const BranchContext& ctx, int u, EvalMode mode) { return delta_unbar_term(ctx, u, mode).value(); }
Rational rho_bar(const BranchContext& ctx, int r, int u, EvalMode mode) { return rho_bar_term(ctx, r, u, mode).value(); }
Rational rho_unbar(const BranchContext& ctx, int r, int u, EvalMode mode) { return rho_unbar_term(ctx, r, u, mode).value(); }

std::pair<Weight, Weight> rwc_target(const BranchContext& ctx, const RWCKey& key) {
    long d = key.direction == Direction::covariant ? 1 : -1;
    Weight T = shifted(ctx.Lambda(), key.r, d);
    Weight t = key.u ? shifted(ctx.lambda(), *key.u, d) : ctx.lambda();
    return {T, t};
}

Rational rwc_square(const BranchContext& ctx, const RWCKey& key, const RwcOptions& opt) {
    check_index(ctx, key.r, ctx.K(), "r");
    if (key.u) check_index(ctx, *key.u, ctx.K() - 1, "u");
    const bool barred = key.direction == Direction::covariant;
    BranchRule rule = opt.rule;
    if (rule == BranchRule::automatic) {
        // Targets follow the family of the source weight in the coupling direction.
        if (barred && covariant_admissible(ctx.Lambda())) rule = BranchRule::covariant;
        else if (!barred && contravariant_admissible(ctx.Lambda())) rule = BranchRule::contravariant;
        else rule = BranchRule::generic;
    }
    auto [T, t] = rwc_target(ctx, key);
    if (!branch_allowed(T, t, rule)) return Rational(0);
    if (!key.u) return barred ? c_bar(ctx, key.r, opt.mode) : c_unbar(ctx, key.r, opt.mode);
    const int u = *key.u;
    const IndexSet& fixed = barred ? ctx.sets().Ibar0 : ctx.sets().I0;
    if (ctx.super() && key.r == u && ctx.grading(u) == 0 && contains(fixed, u)) return Rational(1);
    return barred ? rho_bar(ctx, key.r, u, opt.mode) : rho_unbar(ctx, key.r, u, opt.mode);
}

int rwc_phase(const BranchContext& ctx, const RWCKey& key, PhaseConvention convention) {
    const int r = key.r;
    const bool cov = key.direction == Direction::covariant;
    if (convention == PhaseConvention::printed) {
        if (!key.u) return 1;
        const int u = *key.u;
        int gr = ctx.grading(r), gu = ctx.grading(u);
        int e = gr * gu + (cov ? 0 : gr + gu);
        // Odd indices sit after even ones, so numeric order already ranks them higher.
        return (e % 2 ? -1 : 1) * S(r - u);
    }
    if (!ctx.super()) return key.u ? S(*key.u - r) : 1;
    const IndexSet& I0 = ctx.sets().I0;
    if (!key.u) {
        long c = 0;
        for (int i : I0)
            if (i > r) ++c;
        return c % 2 ? -1 : 1;
    }
    const int u = *key.u;
    int s = S(u - r);
    if (cov && ctx.grading(r) && ctx.grading(u)) s = -s;
    long c = 0;
    for (int i : I0)
        if (i > std::min(r, u) && i < std::max(r, u)) ++c;
    for (int i = 1; i <= ctx.Lambda().shape.m; ++i) c += ctx.Lambda()(i);
    return c % 2 ? -s : s;
}

CoefficientValue rwc(const BranchContext& ctx, const RWCKey& key, const RwcOptions& opt) {
    Rational sq = rwc_square(ctx, key, opt);
    if (sq.is_zero()) return CoefficientValue::zero();
    return {rwc_phase(ctx, key, opt.phase), sq};
}

Rational eta_squared_product(const Weight& Lambda, int u) {
    if (u < 1 || u > Lambda.size()) throw DomainError("u out of range");
    RootVector a = roots(Lambda, Variant::unbarred);
    Rational out(1);
    for (int k = 1; k <= Lambda.size(); ++k) {
        if (k == u) continue;
        Rational den = a(u) - a(k);
        if (den.is_zero()) throw DegenerateRoots("coincident roots at " + std::to_string(u) + ", " + std::to_string(k));
        out *= (den - Rational(grading_sign(Lambda.shape, k))) / den;
    }
    return out;
}

} // namespace sw
