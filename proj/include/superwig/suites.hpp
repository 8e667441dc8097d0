#pragma once

#include "superwig/io.hpp"
#include "superwig/wigner.hpp"

#include <string>
#include <vector>

namespace sw {

struct SuiteOptions {
    unsigned seed = 7;
    int max_label = 5;
    int samples = 200;
    int kmax = 3;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    Json artifact;  // suite-specific records, e.g. the eta report
};

// Agreement of the chain coefficients with the oracle on one coupling V (x) R(source).
struct CouplingStats {
    std::size_t entries = 0;
    std::size_t square_mismatches = 0;
    std::size_t outside = 0;            // chain targets missing from the decomposition
    std::size_t sign_mismatches = 0;    // before any gauge fixing
    std::size_t gauge_conflicts = 0;    // after the best per-state gauge
    std::size_t gram_failures = 0;
};
CouplingStats check_coupling(const Family& F, const Coupling& c, const WcOptions& opt, bool gram);

SuiteResult suite_sumrules(const SuiteOptions& o);
SuiteResult suite_oracle_c(const SuiteOptions& o);
SuiteResult suite_oracle_rho(const SuiteOptions& o);
SuiteResult suite_orthonormality(const SuiteOptions& o);
SuiteResult suite_positivity(const SuiteOptions& o);
SuiteResult suite_nonunitary(const SuiteOptions& o);
SuiteResult suite_symmetry(const SuiteOptions& o);
SuiteResult suite_classical(const SuiteOptions& o);
SuiteResult suite_phases(const SuiteOptions& o);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& o);

} // namespace sw
