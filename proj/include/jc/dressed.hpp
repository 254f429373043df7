#pragma once

#include <stdexcept>

#include "jc/params.hpp"
#include "jc/state.hpp"

namespace jc {

// eps = lam = 0 leaves a level pair degenerate and the mixing angle
// undefined; callers must handle that case rather than us picking a basis.
class DegenerateLevelError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Splitting sqrt(eps^2/4 + index*lam^2).
double q_split_at(int index, double eps, double lam);

// Half-gap of dressed level n, which pairs |n;+> with |n+1;->. Equals
// q_split_at(n + 1, ...); strictly positive unless eps = lam = 0.
double q_split(int n, double eps, double lam);

struct MixingAngle {
    double cos_theta = 1.0;
    double sin_theta = 0.0;

    double cos_two_theta() const { return cos_theta * cos_theta - sin_theta * sin_theta; }
    double sin_two_theta() const { return 2.0 * cos_theta * sin_theta; }
};

// cos = sqrt((q + eps/2)/2q), sin = sgn(lam) sqrt((q - eps/2)/2q) with
// q = q_split(n). Throws DegenerateLevelError when q = 0.
MixingAngle mixing_angle(int n, double eps, double lam);

// Pair-space amplitude vectors (dimension pair_dim(n_max)).
Eigen::VectorXcd pair_ground_vector(int n_max);
Eigen::VectorXcd pair_dressed_vector(int n, const MixingAngle& theta, int sign, int n_max);

// One dressed eigenpair of a single atom-mode pair. `state` embeds the
// dressed pair in the composite space with the other pair in its ground
// state, so it can be compared against full-Hamiltonian eigenvectors.
struct DressedLevel {
    int n = 0;
    int sign = +1;  // +1 or -1
    Subsystem subsystem = Subsystem::A;
    double energy = 0.0;  // this pair's contribution, units E_ref
    double cos_theta = 1.0;
    double sin_theta = 0.0;
    StateVector state;
};

// sign -1: cos|n;+> - sin|n+1;->, energy (1+eps)(n+1)E - q_split(n) E
// sign +1: sin|n;+> + cos|n+1;->, energy (1+eps)(n+1)E + q_split(n) E
DressedLevel dressed_state(int n, int sign, Subsystem j, const SystemParams& params, int n_max);

struct GroundLevel {
    double energy = 0.0;  // eps_j E_j / 2
    StateVector state;    // |0;->_A |0;->_B
};

GroundLevel ground_level(Subsystem j, const SystemParams& params, int n_max);

}  // namespace jc
