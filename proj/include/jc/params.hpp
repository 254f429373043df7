#pragma once

namespace jc {

enum class Subsystem { A, B };

Subsystem other(Subsystem j);

// Physical parameters of the two atom-mode pairs. hbar = 1 throughout; all
// energies are in units of a caller-chosen reference E_ref, so times are in
// units of hbar/E_ref.
struct SystemParams {
    double e_atom_a = 1.0;  // atomic level splitting of atom A
    double e_atom_b = 1.0;
    double omega_a = 1.0;   // angular frequency of mode A
    double omega_b = 1.0;
    double kappa_a = 0.0;   // coupling of atom A to mode A (sign is physical)
    double kappa_b = 0.0;

    double e_atom(Subsystem j) const { return j == Subsystem::A ? e_atom_a : e_atom_b; }
    double omega(Subsystem j) const { return j == Subsystem::A ? omega_a : omega_b; }
    double kappa(Subsystem j) const { return j == Subsystem::A ? kappa_a : kappa_b; }

    bool equal_subsystems() const;

    // Throws std::invalid_argument on e_atom <= 0, omega < 0 or non-finite input.
    void validate() const;
};

// Detuning eps_j = omega_j/E_j - 1 and coupling ratio lam_j = kappa_j/E_j.
struct DimensionlessParams {
    double epsilon_a = 0.0;
    double epsilon_b = 0.0;
    double lambda_a = 0.0;
    double lambda_b = 0.0;

    double epsilon(Subsystem j) const { return j == Subsystem::A ? epsilon_a : epsilon_b; }
    double lambda(Subsystem j) const { return j == Subsystem::A ? lambda_a : lambda_b; }
};

DimensionlessParams to_dimensionless(const SystemParams& params);

// Inverse map, both subsystems sharing the same (eps, lam, e_atom).
SystemParams params_from_dimensionless(double eps, double lam, double e_atom = 1.0);

SystemParams params_from_dimensionless(double eps_a, double lam_a, double eps_b, double lam_b,
                                       double e_atom_a = 1.0, double e_atom_b = 1.0);

}  // namespace jc
