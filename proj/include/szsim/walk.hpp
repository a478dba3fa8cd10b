// Quantum state and the O(N^2) evolution kernel.
//
// A state |phi> = sum_ij a_ij |i>_1 |j>_2 is stored as the N x N matrix Phi
// with Phi(j, i) = a_ij: the column index is the first register. The walk is
// precomputed into Psi (Psi(k, i) = e^{i phi(i,k)} sqrt(G(k,i)), column i
// being the outgoing superposition of node i) and the APR factor vector
// 1 - e^{i theta_i}. One step never materializes an N^2 x N^2 operator.

#pragma once

#include <string>
#include <vector>

#include "szsim/errors.hpp"
#include "szsim/graph.hpp"
#include "szsim/phases.hpp"
#include "szsim/types.hpp"

namespace szsim {

class WalkState {
public:
    // Unit basis state |first>_1 |second>_2.
    static WalkState basis_state(int n, int first, int second);

    // Adopts the matrix; UnnormalizedState if the Frobenius norm strays from 1
    // beyond kNormGuardTol.
    static WalkState from_matrix(ComplexMatrix phi);

    // Rescales to unit norm first (UnnormalizedState only on a zero matrix).
    static WalkState from_matrix_renormalized(ComplexMatrix phi);

    int n_nodes() const { return static_cast<int>(phi_.rows()); }
    const ComplexMatrix& matrix() const { return phi_; }
    Complex amplitude(int first, int second) const { return phi_(second, first); }
    double norm() const { return phi_.norm(); }

    // Surrenders the storage (for allocation-free stepping loops).
    ComplexMatrix take_matrix() && { return std::move(phi_); }

private:
    explicit WalkState(ComplexMatrix phi) : phi_(std::move(phi)) {}

    ComplexMatrix phi_;
};

// Immutable precomputation of U_s(theta, phi) for one (G, phases) pair; safe
// to share across threads.
struct SzegedyWalk {
    ComplexMatrix psi;          // columns have unit 2-norm
    ComplexVector apr_factors;  // 1 - e^{i theta_i}, |.| <= 2
    int n_nodes = 0;
};

// Psi = elementwise sqrt(G) * e^{i phi^T}; DimensionMismatch if shapes differ.
SzegedyWalk build_walk(const TransitionMatrix& g, const PhaseConfig& phases);

// Zero-probability edges carrying a nonzero link phase are physically inert;
// report them so callers can warn.
std::vector<std::string> lint_phases(const TransitionMatrix& g, const PhaseConfig& phases);

// 2*Sigma(theta, phi)|phi> in three vectorized passes:
//   C_i     = sum_k Phi(k,i) * conj(Psi(k,i))     (columnwise reduction)
//   Ct_i    = (1 - e^{i theta_i}) * C_i
//   result  = Psi with column i scaled by Ct_i
// The result is intentionally unnormalized (Sigma is a pseudoprojector).
ComplexMatrix apply_sigma_doubled(const WalkState& state, const SzegedyWalk& walk);

// R(theta, phi)|phi> = 2*Sigma|phi> - |phi>; norm preserving.
WalkState apply_phase_rotation(const WalkState& state, const SzegedyWalk& walk);

// Register swap: transpose of the state matrix. Involutive and bit-exact.
WalkState apply_swap(const WalkState& state);

// U_s(theta, phi) = S_w R(theta, phi). Takes the state by value and recycles
// its storage: stepping in a loop as `state = step_single(std::move(state), w)`
// performs no large allocations.
WalkState step_single(WalkState state, const SzegedyWalk& walk);

// W_s = U_s(walk2) U_s(walk1).
WalkState step_double(WalkState state, const SzegedyWalk& walk1,
                      const SzegedyWalk& walk2);

enum class WalkRegister { First, Second };

// First register: p_i = sum_j |Phi(j,i)|^2 (column sums); second: row sums.
// UnnormalizedState if the state norm deviates from 1 beyond kNormGuardTol.
RealVector measure_register(const WalkState& state, WalkRegister reg);

// (1/sqrt(N)) * Psi: the equal superposition of all psi_i(phi) states.
WalkState initial_uniform_psi(const SzegedyWalk& walk);

}  // namespace szsim
