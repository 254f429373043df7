#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "jc/state.hpp"

namespace jc {

// Tensor factors of the composite space, in index order.
enum class Factor { ModeA = 0, AtomA = 1, ModeB = 2, AtomB = 3 };

// A non-empty proper subset of the four factors to keep under partial trace.
struct Bipartition {
    std::array<bool, 4> keep{};

    bool keeps(Factor f) const { return keep[static_cast<int>(f)]; }
    int kept_count() const;

    static Bipartition atoms() { return Bipartition{{false, true, false, true}}; }
    static Bipartition modes() { return Bipartition{{true, false, true, false}}; }
    static Bipartition pair(Subsystem j) {
        return j == Subsystem::A ? Bipartition{{true, true, false, false}}
                                 : Bipartition{{false, false, true, true}};
    }
};

struct DensityOperator {
    MatrixOperator mat;
    std::vector<int> dims;  // dimensions of the retained factors

    double trace_real() const { return mat.trace().real(); }
    double purity() const { return (mat * mat).trace().real(); }
};

class NotPureError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NoPeakError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

DensityOperator partial_trace(const StateVector& state, const Bipartition& keep);
DensityOperator partial_trace(const MatrixOperator& rho, int n_max, const Bipartition& keep);

// Wootters concurrence of a two-qubit density operator.
double concurrence(const DensityOperator& rho);

// Von Neumann entropy (base 2) of the reduced state across the cut.
double entanglement_entropy(const StateVector& state, const Bipartition& cut);
// Same, from a full-system density operator; throws NotPureError unless
// tr(rho^2) >= 1 - 1e-9.
double entanglement_entropy(const MatrixOperator& rho, int n_max, const Bipartition& cut);

// Probability that both atoms are in their ground states.
double joint_ground_probability(const StateVector& state);
double joint_ground_probability(const MatrixOperator& rho, int n_max);

struct EntanglementReport {
    double t = 0.0;
    double concurrence_atoms = 0.0;
    double entropy_bits = 0.0;  // across the A-pair / B-pair cut
    double p_joint_ground = 0.0;
};

EntanglementReport entanglement_report(const StateVector& state, double t);

struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;
};

struct PeakPeriod {
    double t_peak = 0.0;
    double period = 0.0;
};

// Peak time via parabolic refinement around the discrete maximum; period via
// the first autocorrelation peak. Requires uniform sampling covering at least
// two periods; throws NoPeakError on constant or non-oscillating input.
PeakPeriod find_peak_and_period(const TimeSeries& series);

}  // namespace jc
