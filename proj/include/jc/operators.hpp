#pragma once

#include <Eigen/Dense>
#include <complex>

#include "jc/basis.hpp"

namespace jc {

using Complex = std::complex<double>;
using MatrixOperator = Eigen::MatrixXcd;

enum class OperatorKind {
    Annihilate,    // a
    Create,        // a-dagger
    PhotonNumber,  // N = a-dagger a
    SigmaPlus,     // |+><-|
    SigmaMinus,    // |-><+|
    SigmaZ,        // |+><+| - |-><-|
    Excitation,    // N + sigma_z/2 + 1/2, conserved per mode
};

MatrixOperator kron(const MatrixOperator& a, const MatrixOperator& b);

// Operator on a single atom-mode pair, dimension pair_dim(n_max).
MatrixOperator pair_operator(OperatorKind kind, int n_max);

// The same operator embedded in the composite space, identity on the other pair.
MatrixOperator build_operator(OperatorKind kind, Subsystem j, int n_max);

}  // namespace jc
