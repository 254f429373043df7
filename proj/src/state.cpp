#include "jc/state.hpp"

#include <cmath>
#include <stdexcept>

namespace jc {

StateVector basis_state(const BasisLabel& label, int n_max) {
    StateVector s{Eigen::VectorXcd::Zero(basis_dim(n_max)), n_max};
    s.amps(basis_index(label, n_max)) = 1.0;
    return s;
}

StateVector product_state(const Eigen::VectorXcd& pair_a, const Eigen::VectorXcd& pair_b, int n_max) {
    const int d = pair_dim(n_max);
    if (pair_a.size() != d || pair_b.size() != d) {
        throw std::invalid_argument("pair vector dimension does not match truncation");
    }
    StateVector s{Eigen::VectorXcd(d * d), n_max};
    for (int ia = 0; ia < d; ++ia) {
        for (int ib = 0; ib < d; ++ib) {
            s.amps(ia * d + ib) = pair_a(ia) * pair_b(ib);
        }
    }
    return s;
}

StateVector phi_state(int k, int n_max) {
    switch (k) {
        case 1: return basis_state({0, false, 1, false}, n_max);
        case 2: return basis_state({1, false, 0, false}, n_max);
        case 3: return basis_state({0, true, 0, false}, n_max);
        case 4: return basis_state({0, false, 0, true}, n_max);
        default: throw std::out_of_range("phi index must be 1..4");
    }
}

StateVector psi_alpha(int n_max) {
    StateVector s = phi_state(1, n_max);
    s.amps += phi_state(2, n_max).amps;
    s.amps /= std::sqrt(2.0);
    return s;
}

StateVector psi_beta(int n_max) {
    StateVector s = phi_state(3, n_max);
    s.amps += phi_state(4, n_max).amps;
    s.amps /= std::sqrt(2.0);
    return s;
}

Complex overlap(const StateVector& bra, const StateVector& ket) {
    if (bra.n_max != ket.n_max) {
        throw std::invalid_argument("overlap requires matching truncations");
    }
    return bra.amps.dot(ket.amps);
}

}  // namespace jc
