#include "jc/lindblad.hpp"

#include <cmath>
#include <stdexcept>

#include "jc/oracle.hpp"

namespace jc {

namespace {

constexpr Complex kImag{0.0, 1.0};

void check_shapes(const MatrixOperator& rho, const MatrixOperator& h,
                  const std::vector<MatrixOperator>& loss_ops, const std::vector<double>& gammas) {
    if (rho.rows() != rho.cols() || h.rows() != h.cols() || rho.rows() != h.rows()) {
        throw std::invalid_argument("density operator and Hamiltonian dimensions differ");
    }
    if (loss_ops.size() != gammas.size()) {
        throw std::invalid_argument("one rate per loss operator required");
    }
    for (const auto& op : loss_ops) {
        if (op.rows() != rho.rows() || op.cols() != rho.cols()) {
            throw std::invalid_argument("loss operator dimension differs from density operator");
        }
    }
    for (double g : gammas) {
        if (g < 0.0) throw std::invalid_argument("loss rate must be non-negative");
    }
}

}  // namespace

void DissipationConfig::validate() const {
    if (gamma_a < 0.0 || gamma_b < 0.0) {
        throw std::invalid_argument("loss rate must be non-negative");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("step size must be positive");
    }
    if (t_end < 0.0) {
        throw std::invalid_argument("final time must be non-negative");
    }
    if (record_every < 1) {
        throw std::invalid_argument("record_every must be at least 1");
    }
}

MatrixOperator lindblad_rhs(const MatrixOperator& rho, const MatrixOperator& h,
                            const std::vector<MatrixOperator>& loss_ops,
                            const std::vector<double>& gammas) {
    check_shapes(rho, h, loss_ops, gammas);
    MatrixOperator d = -kImag * (h * rho - rho * h);
    for (size_t k = 0; k < loss_ops.size(); ++k) {
        const MatrixOperator& l = loss_ops[k];
        const MatrixOperator ldl = l.adjoint() * l;
        d += gammas[k] * (l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl));
    }
    return d;
}

MatrixOperator lindblad_rhs(const MatrixOperator& rho, const MatrixOperator& h,
                            const std::vector<MatrixOperator>& loss_ops, double gamma) {
    return lindblad_rhs(rho, h, loss_ops, std::vector<double>(loss_ops.size(), gamma));
}

Trajectory integrate(const MatrixOperator& rho0, const MatrixOperator& h,
                     const DissipationConfig& config, int n_max) {
    config.validate();
    const std::vector<MatrixOperator> loss_ops = {
        build_operator(OperatorKind::Annihilate, Subsystem::A, n_max),
        build_operator(OperatorKind::Annihilate, Subsystem::B, n_max),
    };
    const std::vector<double> gammas = {config.gamma_a, config.gamma_b};
    check_shapes(rho0, h, loss_ops, gammas);

    // Precompute the pieces the right-hand side reuses every substep.
    std::vector<MatrixOperator> ldl;
    ldl.reserve(loss_ops.size());
    for (const auto& l : loss_ops) ldl.push_back(l.adjoint() * l);
    const auto rhs = [&](const MatrixOperator& rho) {
        MatrixOperator d = -kImag * (h * rho - rho * h);
        for (size_t k = 0; k < loss_ops.size(); ++k) {
            d += gammas[k] *
                 (loss_ops[k] * rho * loss_ops[k].adjoint() - 0.5 * (ldl[k] * rho + rho * ldl[k]));
        }
        return d;
    };

    Trajectory out;
    const double e_max = eigendecompose(h).eigenvalues.cwiseAbs().maxCoeff();
    out.step_size_warning = config.dt * e_max > 0.1;

    MatrixOperator rho = rho0;
    out.samples.push_back({0.0, rho});
    double t = 0.0;
    long step = 0;
    while (t < config.t_end - 1e-12 * std::max(1.0, config.t_end)) {
        const double dt = std::min(config.dt, config.t_end - t);
        const MatrixOperator k1 = rhs(rho);
        const MatrixOperator k2 = rhs(rho + 0.5 * dt * k1);
        const MatrixOperator k3 = rhs(rho + 0.5 * dt * k2);
        const MatrixOperator k4 = rhs(rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += dt;
        ++step;

        const double drift = std::abs(rho.trace().real() - 1.0);
        if (drift > 1e-6) {
            throw std::runtime_error("trace drift exceeded 1e-6; reduce the step size");
        }
        const bool last = t >= config.t_end - 1e-12 * std::max(1.0, config.t_end);
        if (last || step % config.record_every == 0) {
            out.samples.push_back({t, rho});
        }
    }
    return out;
}

}  // namespace jc
