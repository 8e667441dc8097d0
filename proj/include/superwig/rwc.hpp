#pragma once

#include "superwig/algebra.hpp"
#include "superwig/branching.hpp"
#include "superwig/exact.hpp"

#include <optional>

namespace sw {

enum class Direction { covariant, contravariant };
// strict: a vanishing denominator raises DegenerateRoots.
// continued: value along the line Lambda_p + t, lambda_p + t as t -> 0.
enum class EvalMode { strict, continued };
enum class PhaseConvention { gauge_consistent, printed };

// A branching pair (Lambda, lambda) at one level of the chain, with its roots and index sets.
class BranchContext {
public:
    // Requires lambda to be a generic branch of Lambda.
    BranchContext(Weight Lambda, Weight lambda);

    // Skips the branch check; the even rule Lambda_i - lambda_i in {0,1} must still hold.
    static BranchContext unchecked(Weight Lambda, Weight lambda);

    const Weight& Lambda() const { return Lambda_; }
    const Weight& lambda() const { return lambda_; }
    const IndexSets& sets() const { return sets_; }
    int K() const { return Lambda_.size(); }
    bool super() const { return !sets_.classical; }
    int grading(int p) const { return super() && p > Lambda_.shape.m ? 1 : 0; }
    int gsign(int p) const { return grading(p) ? -1 : 1; }

    const RootVector& roots(Variant v) const { return v == Variant::barred ? abar_ : a_; }
    const RootVector& subroots(Variant v) const { return v == Variant::barred ? abar0_ : a0_; }

private:
    BranchContext() = default;
    void init();

    Weight Lambda_, lambda_;
    IndexSets sets_;
    RootVector abar_, a_, abar0_, a0_;
};

// Leading term c * t^order of a product of linear factors v + s*t.
class LeadingTerm {
public:
    explicit LeadingTerm(EvalMode mode) : mode_(mode) {}

    void mul(const Rational& v, int slope);
    void div(const Rational& v, int slope);
    void scale(const Rational& c) { coeff_ *= c; }
    void absorb(const LeadingTerm& o);

    bool vanishes() const { return zero_ || order_ > 0; }
    Rational value() const;

private:
    EvalMode mode_;
    int order_ = 0;
    Rational coeff_{1};
    bool zero_ = false;
};

Rational c_bar(const BranchContext& ctx, int r, EvalMode mode = EvalMode::strict);
Rational c_unbar(const BranchContext& ctx, int r, EvalMode mode = EvalMode::strict);
Rational delta_bar(const BranchContext& ctx, int u, EvalMode mode = EvalMode::strict);
Rational delta_unbar(const BranchContext& ctx, int u, EvalMode mode = EvalMode::strict);
// Raw closed forms; zero outside support, diagonal through the shifted subalgebra weight.
Rational rho_bar(const BranchContext& ctx, int r, int u, EvalMode mode = EvalMode::strict);
Rational rho_unbar(const BranchContext& ctx, int r, int u, EvalMode mode = EvalMode::strict);

LeadingTerm c_bar_term(const BranchContext& ctx, int r, EvalMode mode);
LeadingTerm c_unbar_term(const BranchContext& ctx, int r, EvalMode mode);
LeadingTerm delta_bar_term(const BranchContext& ctx, int u, EvalMode mode);
LeadingTerm delta_unbar_term(const BranchContext& ctx, int u, EvalMode mode);
LeadingTerm rho_bar_term(const BranchContext& ctx, int r, int u, EvalMode mode);
LeadingTerm rho_unbar_term(const BranchContext& ctx, int r, int u, EvalMode mode);

struct RWCKey {
    Direction direction = Direction::covariant;
    int r = 1;
    std::optional<int> u;
};

struct RwcOptions {
    EvalMode mode = EvalMode::strict;
    PhaseConvention phase = PhaseConvention::gauge_consistent;
    BranchRule rule = BranchRule::automatic;
};

// Squared coefficient: the invariant eigenvalue, zero when the target pair is not a branch
// under the rule, 1 on the diagonal when u is the only admissible target.
Rational rwc_square(const BranchContext& ctx, const RWCKey& key, const RwcOptions& opt = {});
int rwc_phase(const BranchContext& ctx, const RWCKey& key, PhaseConvention convention);
CoefficientValue rwc(const BranchContext& ctx, const RWCKey& key, const RwcOptions& opt = {});

// Target pair of a key: (Lambda +- eps_r, lambda +- eps_u).
std::pair<Weight, Weight> rwc_target(const BranchContext& ctx, const RWCKey& key);

// prod_{k != u} (a_u - a_k - (-1)^(k)) / (a_u - a_k) over unbarred roots of Lambda.
Rational eta_squared_product(const Weight& Lambda, int u);

} // namespace sw
