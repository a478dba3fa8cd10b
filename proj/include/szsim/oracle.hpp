// Brute-force dense N^2 x N^2 evolution operators for small N. Ground truth
// for the fast kernel; never a production path.

#pragma once

#include "szsim/graph.hpp"
#include "szsim/phases.hpp"
#include "szsim/types.hpp"
#include "szsim/walk.hpp"

namespace szsim {

inline constexpr int kDenseOracleMaxNodes = 64;

struct DenseOperator {
    ComplexMatrix matrix;  // N^2 x N^2, basis index i*N + j for |i>_1 |j>_2
    int n_nodes = 0;
};

// Builds every |psi_i(phi)> explicitly, forms R = sum_i (1-e^{i theta_i})
// |psi_i><psi_i| - 1, then composes the swap permutation. TooLarge above
// kDenseOracleMaxNodes.
DenseOperator dense_unitary(const TransitionMatrix& g, const PhaseConfig& phases);

// U_s(theta2, phi2) * U_s(theta1, phi1).
DenseOperator dense_double(const TransitionMatrix& g1, const PhaseConfig& phases1,
                           const TransitionMatrix& g2, const PhaseConfig& phases2);

// v[i*N + j] = amplitude of |i>_1 |j>_2.
ComplexVector flatten(const WalkState& state);
WalkState unflatten(const ComplexVector& v, int n);

}  // namespace szsim
