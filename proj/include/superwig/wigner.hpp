#pragma once

#include "superwig/branching.hpp"
#include "superwig/family.hpp"
#include "superwig/rwc.hpp"

#include <map>
#include <string>
#include <vector>

namespace sw {

struct FullWC {
    Direction direction = Direction::covariant;
    GTPattern source, target;
    int p = 1;
    CoefficientValue value;
};

struct WcOptions {
    EvalMode mode = EvalMode::continued;
    PhaseConvention phase = PhaseConvention::gauge_consistent;
    BranchRule rule = BranchRule::automatic;
};

// shifts[k] is the shifted row index at level p + k, for levels p..m+n.
FullWC full_wc(Direction d, const GTPattern& source, int p, const std::vector<int>& shifts, const WcOptions& opt = {});
// Same coefficient addressed by its target pattern; zero unless the target has the chain shape.
FullWC full_wc(Direction d, const GTPattern& source, int p, const GTPattern& target, const WcOptions& opt = {});

// All nonzero chain coefficients <t | e_p (x) s> for one source pattern.
std::vector<FullWC> full_wc_column(Direction d, const GTPattern& source, int p, const WcOptions& opt = {});

int form_convert_phase(const GTPattern& p);

struct EtaMeasurement {
    Weight Lambda;
    int r = 1;
    Rational eta_sq;
    int eta_sign = 1;        // common sign of the ratio, 0 when it varies
    std::size_t samples = 0;
};

// Ratio of covariant to conjugated contravariant coupling coefficients, measured on the
// covariant family; throws Inconsistent if the square varies and NotRealizable when either
// coupling has no orthogonal GT decomposition.
EtaMeasurement eta_measured(const Family& cov, const Weight& Lambda, int r);

struct EtaReport {
    Weight Lambda;
    int r = 1;
    Rational eta_sq_measured;
    std::map<std::string, Rational> candidates;
    std::vector<std::string> matches;
};

EtaReport eta_closed_form_report(const Family& cov, const Weight& Lambda, int r);
std::map<std::string, Rational> eta_candidates(const Weight& Lambda, int r);

} // namespace sw
