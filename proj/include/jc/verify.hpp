#pragma once

#include <string>
#include <vector>

#include "jc/oracle.hpp"

namespace jc::verify {

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

// Eigenvalue of `spectrum` nearest to e_target, together with the overlap of
// v onto the (possibly degenerate) eigenspace of that eigenvalue.
struct SpectrumMatch {
    double eigenvalue = 0.0;
    double overlap = 0.0;
};

SpectrumMatch match_eigenspace(const Spectrum& spectrum, const Eigen::VectorXcd& v, double e_target);

// The individual checks mirror the verification battery run by the
// acceptance suite and by the `verify` CLI subcommand.
CheckResult check_spectrum_grid(int n_max = 8);
CheckResult check_resonant_evolution();
CheckResult check_detuned_evolution();
CheckResult check_timing_formulas();
CheckResult check_peak_concurrence();
CheckResult check_conservation(int n_max = 8);
CheckResult check_asymmetric_evolution();
CheckResult check_lindblad_limits();
CheckResult check_mutation_sensitivity(int n_max = 8);

std::vector<CheckResult> run_all(int n_max_spectrum = 8);

}  // namespace jc::verify
