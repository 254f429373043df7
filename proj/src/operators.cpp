#include "jc/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace jc {

MatrixOperator kron(const MatrixOperator& a, const MatrixOperator& b) {
    MatrixOperator c(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return c;
}

MatrixOperator pair_operator(OperatorKind kind, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("truncation must keep at least one photon");
    }
    const int d = pair_dim(n_max);
    MatrixOperator op = MatrixOperator::Zero(d, d);
    for (int n = 0; n <= n_max; ++n) {
        for (int s = 0; s <= 1; ++s) {
            const bool excited = s != 0;
            const int col = pair_index(n, excited, n_max);
            switch (kind) {
                case OperatorKind::Annihilate:
                    if (n > 0) op(pair_index(n - 1, excited, n_max), col) = std::sqrt(double(n));
                    break;
                case OperatorKind::Create:
                    if (n < n_max) op(pair_index(n + 1, excited, n_max), col) = std::sqrt(double(n + 1));
                    break;
                case OperatorKind::PhotonNumber:
                    op(col, col) = double(n);
                    break;
                case OperatorKind::SigmaPlus:
                    if (!excited) op(pair_index(n, true, n_max), col) = 1.0;
                    break;
                case OperatorKind::SigmaMinus:
                    if (excited) op(pair_index(n, false, n_max), col) = 1.0;
                    break;
                case OperatorKind::SigmaZ:
                    op(col, col) = excited ? 1.0 : -1.0;
                    break;
                case OperatorKind::Excitation:
                    op(col, col) = double(n) + (excited ? 1.0 : 0.0);
                    break;
            }
        }
    }
    return op;
}

MatrixOperator build_operator(OperatorKind kind, Subsystem j, int n_max) {
    const MatrixOperator local = pair_operator(kind, n_max);
    const MatrixOperator id = MatrixOperator::Identity(pair_dim(n_max), pair_dim(n_max));
    return j == Subsystem::A ? kron(local, id) : kron(id, local);
}

}  // namespace jc
