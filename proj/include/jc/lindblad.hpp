#pragma once

#include <vector>

#include "jc/operators.hpp"

namespace jc {

struct DissipationConfig {
    double gamma_a = 0.0;  // photon loss rate of mode A, units E_ref/hbar
    double gamma_b = 0.0;
    double dt = 1e-3;
    double t_end = 1.0;
    int record_every = 1;  // keep every k-th step in the trajectory

    void validate() const;
};

// drho/dt = -i[h, rho] + sum_j gamma_j (L rho L+ - L+L rho/2 - rho L+L/2).
MatrixOperator lindblad_rhs(const MatrixOperator& rho, const MatrixOperator& h,
                            const std::vector<MatrixOperator>& loss_ops,
                            const std::vector<double>& gammas);
MatrixOperator lindblad_rhs(const MatrixOperator& rho, const MatrixOperator& h,
                            const std::vector<MatrixOperator>& loss_ops, double gamma);

struct TrajectorySample {
    double t = 0.0;
    MatrixOperator rho;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    // dt * max|E_k| > 0.1 at integration start; results may be inaccurate.
    bool step_size_warning = false;
};

// Fixed-step RK4 over lindblad_rhs with the photon loss operators a_A, a_B.
// Throws std::runtime_error if the trace drifts from 1 by more than 1e-6.
Trajectory integrate(const MatrixOperator& rho0, const MatrixOperator& h,
                     const DissipationConfig& config, int n_max);

}  // namespace jc
