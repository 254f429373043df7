#pragma once

#include "jc/operators.hpp"
#include "jc/params.hpp"
#include "jc/state.hpp"

namespace jc {

// Truncated-Fock-space Hamiltonian assembled from the physical parameters,
//   H_j = omega_j (N_j + 1/2) + (E_j/2) sigma_zj + kappa_j (a_j+ sigma_-j + a_j sigma_+j),
// summed over both pairs. Used as ground truth against the closed forms.
MatrixOperator build_hamiltonian(const SystemParams& params, int n_max);

// Same matrix assembled from the dimensionless rewrite,
//   H_j = (1+eps_j) E_j (N_j + 1/2) + (E_j/2) sigma_zj + lam_j E_j (a_j+ sigma_-j + a_j sigma_+j).
MatrixOperator build_hamiltonian_dimensionless(const SystemParams& params, int n_max);

// One pair's contribution, embedded in the composite space.
MatrixOperator build_hamiltonian_part(Subsystem j, const SystemParams& params, int n_max);

struct Spectrum {
    Eigen::VectorXd eigenvalues;    // ascending
    Eigen::MatrixXcd eigenvectors;  // column k belongs to eigenvalue k
};

// Dense Hermitian diagonalization. Throws std::invalid_argument if the input
// is not Hermitian within 1e-10.
Spectrum eigendecompose(const MatrixOperator& h);

// sum_k <v_k|state0> exp(-i E_k t) v_k; norm preserving.
StateVector evolve_exact(const StateVector& state0, const Spectrum& spectrum, double t);
StateVector evolve_exact(const StateVector& state0, const MatrixOperator& h, double t);

// Max-entry norm of the commutator [h, op].
double check_conserved(const MatrixOperator& h, const MatrixOperator& op);

}  // namespace jc
