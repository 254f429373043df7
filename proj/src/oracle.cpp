#include "jc/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace jc {

namespace {

constexpr Complex kImag{0.0, 1.0};

MatrixOperator pair_part(double photon_energy, double atom_energy, double coupling, int n_max) {
    const int d = pair_dim(n_max);
    const MatrixOperator number = pair_operator(OperatorKind::PhotonNumber, n_max);
    const MatrixOperator sz = pair_operator(OperatorKind::SigmaZ, n_max);
    const MatrixOperator a = pair_operator(OperatorKind::Annihilate, n_max);
    const MatrixOperator ad = pair_operator(OperatorKind::Create, n_max);
    const MatrixOperator sp = pair_operator(OperatorKind::SigmaPlus, n_max);
    const MatrixOperator sm = pair_operator(OperatorKind::SigmaMinus, n_max);
    return photon_energy * (number + 0.5 * MatrixOperator::Identity(d, d)) + 0.5 * atom_energy * sz +
           coupling * (ad * sm + a * sp);
}

MatrixOperator embed(const MatrixOperator& local, Subsystem j, int n_max) {
    const MatrixOperator id = MatrixOperator::Identity(pair_dim(n_max), pair_dim(n_max));
    return j == Subsystem::A ? kron(local, id) : kron(id, local);
}

}  // namespace

MatrixOperator build_hamiltonian_part(Subsystem j, const SystemParams& params, int n_max) {
    params.validate();
    return embed(pair_part(params.omega(j), params.e_atom(j), params.kappa(j), n_max), j, n_max);
}

MatrixOperator build_hamiltonian(const SystemParams& params, int n_max) {
    return build_hamiltonian_part(Subsystem::A, params, n_max) +
           build_hamiltonian_part(Subsystem::B, params, n_max);
}

MatrixOperator build_hamiltonian_dimensionless(const SystemParams& params, int n_max) {
    const DimensionlessParams dp = to_dimensionless(params);
    MatrixOperator h = MatrixOperator::Zero(basis_dim(n_max), basis_dim(n_max));
    for (Subsystem j : {Subsystem::A, Subsystem::B}) {
        const double e = params.e_atom(j);
        h += embed(pair_part((1.0 + dp.epsilon(j)) * e, e, dp.lambda(j) * e, n_max), j, n_max);
    }
    return h;
}

Spectrum eigendecompose(const MatrixOperator& h) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("eigendecompose requires a square matrix");
    }
    const double defect = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-10) {
        throw std::invalid_argument("eigendecompose requires a Hermitian matrix");
    }
    Eigen::SelfAdjointEigenSolver<MatrixOperator> solver;
    solver.compute(0.5 * (h + h.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed to converge");
    }
    return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

StateVector evolve_exact(const StateVector& state0, const Spectrum& spectrum, double t) {
    if (state0.amps.size() != spectrum.eigenvectors.rows()) {
        throw std::invalid_argument("state dimension does not match spectrum");
    }
    Eigen::VectorXcd coeff = spectrum.eigenvectors.adjoint() * state0.amps;
    for (Eigen::Index k = 0; k < coeff.size(); ++k) {
        coeff(k) *= std::exp(-kImag * spectrum.eigenvalues(k) * t);
    }
    return StateVector{spectrum.eigenvectors * coeff, state0.n_max};
}

StateVector evolve_exact(const StateVector& state0, const MatrixOperator& h, double t) {
    return evolve_exact(state0, eigendecompose(h), t);
}

double check_conserved(const MatrixOperator& h, const MatrixOperator& op) {
    if (h.rows() != op.rows() || h.cols() != op.cols()) {
        throw std::invalid_argument("commutator requires matching dimensions");
    }
    return (h * op - op * h).cwiseAbs().maxCoeff();
}

}  // namespace jc
