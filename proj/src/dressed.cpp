#include "jc/dressed.hpp"

#include <algorithm>
#include <cmath>

namespace jc {

double q_split_at(int index, double eps, double lam) {
    if (index < 0) {
        throw std::invalid_argument("splitting index must be non-negative");
    }
    return std::sqrt(0.25 * eps * eps + double(index) * lam * lam);
}

double q_split(int n, double eps, double lam) {
    return q_split_at(n + 1, eps, lam);
}

MixingAngle mixing_angle(int n, double eps, double lam) {
    const double q = q_split(n, eps, lam);
    if (q <= 0.0) {
        throw DegenerateLevelError("mixing angle undefined at eps = lam = 0");
    }
    // Radicands can go slightly negative through rounding when lam = 0.
    const double c2 = std::max(0.0, (q + 0.5 * eps) / (2.0 * q));
    const double s2 = std::max(0.0, (q - 0.5 * eps) / (2.0 * q));
    const double sign = lam < 0.0 ? -1.0 : 1.0;
    return MixingAngle{std::sqrt(c2), sign * std::sqrt(s2)};
}

Eigen::VectorXcd pair_ground_vector(int n_max) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(pair_dim(n_max));
    v(pair_index(0, false, n_max)) = 1.0;
    return v;
}

Eigen::VectorXcd pair_dressed_vector(int n, const MixingAngle& theta, int sign, int n_max) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("dressed sign must be +1 or -1");
    }
    if (n < 0 || n + 1 > n_max) {
        throw std::invalid_argument("dressed level outside truncation; increase n_max");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(pair_dim(n_max));
    if (sign < 0) {
        v(pair_index(n, true, n_max)) = theta.cos_theta;
        v(pair_index(n + 1, false, n_max)) = -theta.sin_theta;
    } else {
        v(pair_index(n, true, n_max)) = theta.sin_theta;
        v(pair_index(n + 1, false, n_max)) = theta.cos_theta;
    }
    return v;
}

DressedLevel dressed_state(int n, int sign, Subsystem j, const SystemParams& params, int n_max) {
    const DimensionlessParams dp = to_dimensionless(params);
    const double eps = dp.epsilon(j);
    const double lam = dp.lambda(j);
    const double e = params.e_atom(j);

    const MixingAngle theta = mixing_angle(n, eps, lam);
    const double energy = (1.0 + eps) * double(n + 1) * e + double(sign) * q_split(n, eps, lam) * e;

    const Eigen::VectorXcd dressed = pair_dressed_vector(n, theta, sign, n_max);
    const Eigen::VectorXcd ground = pair_ground_vector(n_max);
    StateVector state = j == Subsystem::A ? product_state(dressed, ground, n_max)
                                          : product_state(ground, dressed, n_max);
    return DressedLevel{n, sign, j, energy, theta.cos_theta, theta.sin_theta, std::move(state)};
}

GroundLevel ground_level(Subsystem j, const SystemParams& params, int n_max) {
    const DimensionlessParams dp = to_dimensionless(params);
    const double energy = 0.5 * dp.epsilon(j) * params.e_atom(j);
    StateVector state = product_state(pair_ground_vector(n_max), pair_ground_vector(n_max), n_max);
    return GroundLevel{energy, std::move(state)};
}

}  // namespace jc
