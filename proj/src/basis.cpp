#include "jc/basis.hpp"

#include <stdexcept>

namespace jc {

int pair_index(int n, bool excited, int n_max) {
    if (n < 0 || n > n_max) {
        throw std::out_of_range("photon count outside truncation");
    }
    return 2 * n + (excited ? 1 : 0);
}

int basis_index(const BasisLabel& label, int n_max) {
    const int ia = pair_index(label.n_a, label.excited_a, n_max);
    const int ib = pair_index(label.n_b, label.excited_b, n_max);
    return ia * pair_dim(n_max) + ib;
}

BasisLabel basis_label(int index, int n_max) {
    if (index < 0 || index >= basis_dim(n_max)) {
        throw std::out_of_range("basis index outside truncation");
    }
    const int d = pair_dim(n_max);
    const int ia = index / d;
    const int ib = index % d;
    return BasisLabel{ia / 2, (ia % 2) != 0, ib / 2, (ib % 2) != 0};
}

}  // namespace jc
