#pragma once

#include "jc/params.hpp"

namespace jc {

// Product-basis label |n_A; s_A> |n_B; s_B>. excited == false is the atomic
// ground state (the lower spinor row).
struct BasisLabel {
    int n_a = 0;
    bool excited_a = false;
    int n_b = 0;
    bool excited_b = false;

    bool operator==(const BasisLabel&) const = default;
};

// One atom-mode pair spans 2*(n_max+1) states; the composite 4*(n_max+1)^2.
constexpr int pair_dim(int n_max) { return 2 * (n_max + 1); }
constexpr int basis_dim(int n_max) {
    const int d = pair_dim(n_max);
    return d * d;
}

// Dense index within one pair, lexicographic in (n, s), ground before excited.
int pair_index(int n, bool excited, int n_max);

// Dense composite index, lexicographic in (n_A, s_A, n_B, s_B).
int basis_index(const BasisLabel& label, int n_max);
BasisLabel basis_label(int index, int n_max);

}  // namespace jc
