#include "szsim/walk.hpp"

#include <cmath>
#include <utility>

namespace szsim {

namespace {

void require_same_n(int a, int b, const char* where) {
    if (a != b) {
        throw DimensionMismatch(std::string(where) + ": walk has " + std::to_string(b) +
                                " nodes, state has " + std::to_string(a));
    }
}

}  // namespace

WalkState WalkState::basis_state(int n, int first, int second) {
    if (n < 1 || first < 0 || first >= n || second < 0 || second >= n) {
        throw InvalidNode("basis_state: indices outside [0, n)");
    }
    ComplexMatrix phi = ComplexMatrix::Zero(n, n);
    phi(second, first) = Complex(1.0, 0.0);
    return WalkState(std::move(phi));
}

WalkState WalkState::from_matrix(ComplexMatrix phi) {
    if (phi.rows() != phi.cols() || phi.rows() < 1) {
        throw DimensionMismatch("WalkState: matrix must be square and nonempty");
    }
    const double norm = phi.norm();
    if (std::fabs(norm - 1.0) > kNormGuardTol) {
        throw UnnormalizedState("WalkState: Frobenius norm " + std::to_string(norm));
    }
    return WalkState(std::move(phi));
}

WalkState WalkState::from_matrix_renormalized(ComplexMatrix phi) {
    if (phi.rows() != phi.cols() || phi.rows() < 1) {
        throw DimensionMismatch("WalkState: matrix must be square and nonempty");
    }
    const double norm = phi.norm();
    if (norm <= 0.0) {
        throw UnnormalizedState("WalkState: zero matrix cannot be normalized");
    }
    phi /= norm;
    return WalkState(std::move(phi));
}

SzegedyWalk build_walk(const TransitionMatrix& g, const PhaseConfig& phases) {
    const int n = g.n_nodes();
    if (phases.n_nodes() != n) {
        throw DimensionMismatch("build_walk: phases sized for " +
                                std::to_string(phases.n_nodes()) + " nodes, graph has " +
                                std::to_string(n));
    }
    SzegedyWalk walk;
    walk.n_nodes = n;
    // Psi(k, i) = e^{i phi(i, k)} sqrt(G(k, i))
    walk.psi = g.matrix().cwiseSqrt().cast<Complex>().cwiseProduct(
        (Complex(0.0, 1.0) * phases.link.transpose().cast<Complex>()).array().exp().matrix());
    walk.apr_factors =
        ComplexVector::Ones(n) -
        (Complex(0.0, 1.0) * phases.apr.cast<Complex>()).array().exp().matrix();
    return walk;
}

std::vector<std::string> lint_phases(const TransitionMatrix& g, const PhaseConfig& phases) {
    std::vector<std::string> warnings;
    if (phases.n_nodes() != g.n_nodes()) {
        throw DimensionMismatch("lint_phases: dimension mismatch");
    }
    const int n = g.n_nodes();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g.prob(j, i) == 0.0 && angle_distance(phases.link(i, j), 0.0) > 0.0) {
                warnings.push_back("link phase on zero-probability edge (" + std::to_string(i) +
                                   " -> " + std::to_string(j) + ") is inert");
            }
        }
    }
    return warnings;
}

ComplexMatrix apply_sigma_doubled(const WalkState& state, const SzegedyWalk& walk) {
    require_same_n(state.n_nodes(), walk.n_nodes, "apply_sigma_doubled");
    // Pass 1: C_i = <psi_i | phi> as a columnwise reduction.
    ComplexVector coeff =
        state.matrix().cwiseProduct(walk.psi.conjugate()).colwise().sum().transpose();
    // Pass 2: APR weighting.
    coeff.array() *= walk.apr_factors.array();
    // Pass 3: scatter back onto the psi columns.
    return walk.psi * coeff.asDiagonal();
}

WalkState apply_phase_rotation(const WalkState& state, const SzegedyWalk& walk) {
    ComplexMatrix rotated = apply_sigma_doubled(state, walk) - state.matrix();
    return WalkState::from_matrix(std::move(rotated));
}

WalkState apply_swap(const WalkState& state) {
    return WalkState::from_matrix(state.matrix().transpose());
}

WalkState step_single(WalkState state, const SzegedyWalk& walk) {
    const int n = state.n_nodes();
    require_same_n(n, walk.n_nodes, "step_single");
    ComplexMatrix m = std::move(state).take_matrix();
    ComplexVector coeff = m.cwiseProduct(walk.psi.conjugate()).colwise().sum().transpose();
    coeff.array() *= walk.apr_factors.array();
    // fused rotation: column i becomes Ct_i * psi_i - phi_i, in place
    for (int i = 0; i < n; ++i) {
        m.col(i) = walk.psi.col(i) * coeff(i) - m.col(i);
    }
    m.transposeInPlace();
    return WalkState::from_matrix(std::move(m));
}

WalkState step_double(WalkState state, const SzegedyWalk& walk1,
                      const SzegedyWalk& walk2) {
    return step_single(step_single(std::move(state), walk1), walk2);
}

RealVector measure_register(const WalkState& state, WalkRegister reg) {
    const double sq = state.matrix().squaredNorm();
    if (std::fabs(sq - 1.0) > kNormGuardTol) {
        throw UnnormalizedState("measure_register: squared norm " + std::to_string(sq));
    }
    if (reg == WalkRegister::First) {
        return state.matrix().cwiseAbs2().colwise().sum();
    }
    return state.matrix().cwiseAbs2().rowwise().sum();
}

WalkState initial_uniform_psi(const SzegedyWalk& walk) {
    ComplexMatrix phi = walk.psi / std::sqrt(static_cast<double>(walk.n_nodes));
    return WalkState::from_matrix(std::move(phi));
}

}  // namespace szsim
