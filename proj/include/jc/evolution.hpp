#pragma once

#include <array>

#include "jc/dressed.hpp"

namespace jc {

// Energies of the four stationary states spanning V,
//   psi_1 = G_A (psi_0^-)_B    psi_2 = (psi_0^-)_A G_B
//   psi_3 = G_A (psi_0^+)_B    psi_4 = (psi_0^+)_A G_B
// obtained by adding the two pair energies.
std::array<double, 4> four_state_energies(const SystemParams& params);

// Coefficients c_k of psi_alpha = (1/sqrt2) sum_k c_k psi_k:
// (-sin th_B, -sin th_A, cos th_B, cos th_A). Their squares sum to 2.
std::array<double, 4> expansion_coefficients(const MixingAngle& theta_a, const MixingAngle& theta_b);

// The four stationary states psi_1..psi_4 as composite amplitudes.
std::array<StateVector, 4> stationary_states(const SystemParams& params, int n_max);

// Exact evolution of psi_alpha for arbitrary parameters, expanded back to
// composite-basis amplitudes. Norm 1 at every t.
StateVector evolve_general(double t, const SystemParams& params, int n_max);

// Amplitudes of the evolved state on psi_alpha / psi_beta for equal
// subsystems. The global phase exp(-i E' t), E' = E(1 + 3 eps/2), is kept
// explicit so composite amplitudes match Hamiltonian evolution exactly.
struct EvolutionAmplitudes {
    double t = 0.0;
    Complex f_amp{1.0, 0.0};  // on psi_alpha: cos(qEt) - i cos(2th) sin(qEt)
    Complex g_amp{0.0, 0.0};  // on psi_beta: -i sin(2th) sin(qEt)
    Complex global_phase{1.0, 0.0};
};

EvolutionAmplitudes evolve_detuned_special(double t, double eps, double lam, double e_atom = 1.0);

// global_phase * (f psi_alpha + g psi_beta) as composite amplitudes.
StateVector to_state(const EvolutionAmplitudes& amp, int n_max);

enum class BracketSum {
    PsiOnePlusTwo,    // coefficients f_k
    PsiThreePlusFour  // coefficients g_k
};

// Phi-basis coefficients of psi_1 + psi_2 or psi_3 + psi_4 (equal subsystems):
// f = (-sin, -sin, cos, cos), g = (cos, cos, sin, sin).
std::array<double, 4> phi_basis_expansion(BracketSum which, const MixingAngle& theta);

}  // namespace jc
