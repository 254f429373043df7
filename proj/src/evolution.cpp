#include "jc/evolution.hpp"

#include <cmath>

namespace jc {

namespace {

constexpr Complex kImag{0.0, 1.0};

}  // namespace

std::array<double, 4> four_state_energies(const SystemParams& params) {
    const DimensionlessParams dp = to_dimensionless(params);
    const double ea = params.e_atom_a;
    const double eb = params.e_atom_b;
    const double qa = q_split(0, dp.epsilon_a, dp.lambda_a);
    const double qb = q_split(0, dp.epsilon_b, dp.lambda_b);
    const double ground_a = 0.5 * dp.epsilon_a * ea;
    const double ground_b = 0.5 * dp.epsilon_b * eb;
    const double excited_a = (1.0 + dp.epsilon_a) * ea;
    const double excited_b = (1.0 + dp.epsilon_b) * eb;
    return {
        ground_a + excited_b - qb * eb,
        ground_b + excited_a - qa * ea,
        ground_a + excited_b + qb * eb,
        ground_b + excited_a + qa * ea,
    };
}

std::array<double, 4> expansion_coefficients(const MixingAngle& theta_a, const MixingAngle& theta_b) {
    return {-theta_b.sin_theta, -theta_a.sin_theta, theta_b.cos_theta, theta_a.cos_theta};
}

std::array<StateVector, 4> stationary_states(const SystemParams& params, int n_max) {
    const DimensionlessParams dp = to_dimensionless(params);
    const MixingAngle theta_a = mixing_angle(0, dp.epsilon_a, dp.lambda_a);
    const MixingAngle theta_b = mixing_angle(0, dp.epsilon_b, dp.lambda_b);
    const Eigen::VectorXcd ground = pair_ground_vector(n_max);
    return {
        product_state(ground, pair_dressed_vector(0, theta_b, -1, n_max), n_max),
        product_state(pair_dressed_vector(0, theta_a, -1, n_max), ground, n_max),
        product_state(ground, pair_dressed_vector(0, theta_b, +1, n_max), n_max),
        product_state(pair_dressed_vector(0, theta_a, +1, n_max), ground, n_max),
    };
}

StateVector evolve_general(double t, const SystemParams& params, int n_max) {
    const DimensionlessParams dp = to_dimensionless(params);
    const MixingAngle theta_a = mixing_angle(0, dp.epsilon_a, dp.lambda_a);
    const MixingAngle theta_b = mixing_angle(0, dp.epsilon_b, dp.lambda_b);

    const std::array<StateVector, 4> psi = stationary_states(params, n_max);
    const std::array<double, 4> energies = four_state_energies(params);
    const std::array<double, 4> coeff = expansion_coefficients(theta_a, theta_b);

    StateVector out{Eigen::VectorXcd::Zero(basis_dim(n_max)), n_max};
    for (int k = 0; k < 4; ++k) {
        out.amps += coeff[k] * std::exp(-kImag * energies[k] * t) * psi[k].amps;
    }
    out.amps /= std::sqrt(2.0);
    return out;
}

EvolutionAmplitudes evolve_detuned_special(double t, double eps, double lam, double e_atom) {
    if (e_atom <= 0.0) {
        throw std::invalid_argument("atomic splitting must be positive");
    }
    const double q = q_split(0, eps, lam);
    if (q <= 0.0) {
        throw DegenerateLevelError("evolution amplitudes undefined at eps = lam = 0");
    }
    const MixingAngle theta = mixing_angle(0, eps, lam);
    const double phase = q * e_atom * t;
    const double e_shifted = e_atom * (1.0 + 1.5 * eps);
    EvolutionAmplitudes amp;
    amp.t = t;
    amp.f_amp = std::cos(phase) - kImag * theta.cos_two_theta() * std::sin(phase);
    amp.g_amp = -kImag * theta.sin_two_theta() * std::sin(phase);
    amp.global_phase = std::exp(-kImag * e_shifted * t);
    return amp;
}

StateVector to_state(const EvolutionAmplitudes& amp, int n_max) {
    StateVector out = psi_alpha(n_max);
    out.amps = amp.global_phase * (amp.f_amp * out.amps + amp.g_amp * psi_beta(n_max).amps);
    return out;
}

std::array<double, 4> phi_basis_expansion(BracketSum which, const MixingAngle& theta) {
    if (which == BracketSum::PsiOnePlusTwo) {
        return {-theta.sin_theta, -theta.sin_theta, theta.cos_theta, theta.cos_theta};
    }
    return {theta.cos_theta, theta.cos_theta, theta.sin_theta, theta.sin_theta};
}

}  // namespace jc
