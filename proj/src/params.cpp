#include "jc/params.hpp"

#include <cmath>
#include <stdexcept>

namespace jc {

Subsystem other(Subsystem j) {
    return j == Subsystem::A ? Subsystem::B : Subsystem::A;
}

bool SystemParams::equal_subsystems() const {
    return e_atom_a == e_atom_b && omega_a == omega_b && kappa_a == kappa_b;
}

void SystemParams::validate() const {
    const double fields[] = {e_atom_a, e_atom_b, omega_a, omega_b, kappa_a, kappa_b};
    for (double x : fields) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("system parameters must be finite");
        }
    }
    if (e_atom_a <= 0.0 || e_atom_b <= 0.0) {
        throw std::invalid_argument("atomic splitting must be positive");
    }
    if (omega_a < 0.0 || omega_b < 0.0) {
        throw std::invalid_argument("mode frequency must be non-negative");
    }
}

DimensionlessParams to_dimensionless(const SystemParams& params) {
    params.validate();
    return DimensionlessParams{
        params.omega_a / params.e_atom_a - 1.0,
        params.omega_b / params.e_atom_b - 1.0,
        params.kappa_a / params.e_atom_a,
        params.kappa_b / params.e_atom_b,
    };
}

SystemParams params_from_dimensionless(double eps, double lam, double e_atom) {
    return params_from_dimensionless(eps, lam, eps, lam, e_atom, e_atom);
}

SystemParams params_from_dimensionless(double eps_a, double lam_a, double eps_b, double lam_b,
                                       double e_atom_a, double e_atom_b) {
    SystemParams p;
    p.e_atom_a = e_atom_a;
    p.e_atom_b = e_atom_b;
    p.omega_a = (1.0 + eps_a) * e_atom_a;
    p.omega_b = (1.0 + eps_b) * e_atom_b;
    p.kappa_a = lam_a * e_atom_a;
    p.kappa_b = lam_b * e_atom_b;
    p.validate();
    return p;
}

}  // namespace jc
