#pragma once

#include <Eigen/Dense>

#include "jc/basis.hpp"
#include "jc/operators.hpp"

namespace jc {

// Amplitudes over the composite basis; normalized by construction.
struct StateVector {
    Eigen::VectorXcd amps;
    int n_max = 0;

    double norm() const { return amps.norm(); }
    Complex amplitude(const BasisLabel& label) const { return amps(basis_index(label, n_max)); }
};

StateVector basis_state(const BasisLabel& label, int n_max);

// Composite state from per-pair amplitude vectors of dimension pair_dim(n_max).
StateVector product_state(const Eigen::VectorXcd& pair_a, const Eigen::VectorXcd& pair_b, int n_max);

// The four states spanning the space V that is closed under evolution of
// psi_alpha:
//   Phi_1 = |0;->_A |1;->_B    Phi_2 = |1;->_A |0;->_B
//   Phi_3 = |0;+>_A |0;->_B    Phi_4 = |0;->_A |0;+>_B
StateVector phi_state(int k, int n_max);

StateVector psi_alpha(int n_max);  // (Phi_1 + Phi_2)/sqrt(2)
StateVector psi_beta(int n_max);   // (Phi_3 + Phi_4)/sqrt(2)

Complex overlap(const StateVector& bra, const StateVector& ket);

}  // namespace jc
