#include "szsim/oracle.hpp"

#include <string>

#include "szsim/walk.hpp"

namespace szsim {

DenseOperator dense_unitary(const TransitionMatrix& g, const PhaseConfig& phases) {
    const int n = g.n_nodes();
    if (n > kDenseOracleMaxNodes) {
        throw TooLarge("dense_unitary: " + std::to_string(n) + " nodes exceeds the guard of " +
                       std::to_string(kDenseOracleMaxNodes));
    }
    const SzegedyWalk walk = build_walk(g, phases);
    const long dim = static_cast<long>(n) * n;

    // R = sum_i (1 - e^{i theta_i}) |psi_i><psi_i| - 1
    ComplexMatrix rot = -ComplexMatrix::Identity(dim, dim);
    for (int i = 0; i < n; ++i) {
        ComplexVector psi_i = ComplexVector::Zero(dim);
        psi_i.segment(static_cast<long>(i) * n, n) = walk.psi.col(i);
        rot.noalias() += walk.apr_factors(i) * psi_i * psi_i.adjoint();
    }

    // U = S_w R: row (i, j) of U is row (j, i) of R.
    DenseOperator op;
    op.n_nodes = n;
    op.matrix.resize(dim, dim);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            op.matrix.row(static_cast<long>(i) * n + j) = rot.row(static_cast<long>(j) * n + i);
        }
    }
    return op;
}

DenseOperator dense_double(const TransitionMatrix& g1, const PhaseConfig& phases1,
                           const TransitionMatrix& g2, const PhaseConfig& phases2) {
    if (g1.n_nodes() != g2.n_nodes()) {
        throw DimensionMismatch("dense_double: graphs of different size");
    }
    DenseOperator first = dense_unitary(g1, phases1);
    DenseOperator second = dense_unitary(g2, phases2);
    DenseOperator op;
    op.n_nodes = first.n_nodes;
    op.matrix = second.matrix * first.matrix;
    return op;
}

ComplexVector flatten(const WalkState& state) {
    const int n = state.n_nodes();
    // Column-major state storage: column i (first register) is contiguous,
    // so v[i*n + j] = Phi(j, i) = amplitude(i, j).
    return Eigen::Map<const ComplexVector>(state.matrix().data(),
                                           static_cast<long>(n) * n);
}

WalkState unflatten(const ComplexVector& v, int n) {
    if (v.size() != static_cast<long>(n) * n) {
        throw DimensionMismatch("unflatten: vector length is not n^2");
    }
    ComplexMatrix phi = Eigen::Map<const ComplexMatrix>(v.data(), n, n);
    return WalkState::from_matrix(std::move(phi));
}

}  // namespace szsim
