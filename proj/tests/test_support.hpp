// Shared randomized-input generators and comparison helpers for the suites.

#pragma once

#include <random>

#include "szsim/coin.hpp"
#include "szsim/graph.hpp"
#include "szsim/oracle.hpp"
#include "szsim/walk.hpp"

namespace szsim::test {

inline WalkState random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix phi(n, n);
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            phi(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    return WalkState::from_matrix_renormalized(std::move(phi));
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// Dense 2*Sigma(theta, phi) assembled straight from the |psi_i(phi)> vectors;
// independent of the production kernel.
inline ComplexMatrix dense_two_sigma(const SzegedyWalk& walk) {
    const int n = walk.n_nodes;
    const long dim = static_cast<long>(n) * n;
    ComplexMatrix sigma2 = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
        ComplexVector psi_i = ComplexVector::Zero(dim);
        psi_i.segment(static_cast<long>(i) * n, n) = walk.psi.col(i);
        sigma2 += walk.apr_factors(i) * psi_i * psi_i.adjoint();
    }
    return sigma2;
}

// Explicit swap permutation on the flattened basis.
inline ComplexMatrix dense_swap(int n) {
    const long dim = static_cast<long>(n) * n;
    ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            s(static_cast<long>(j) * n + i, static_cast<long>(i) * n + j) = 1.0;
        }
    }
    return s;
}

// Random symmetric adjacency with no isolated node; self-loops allowed.
inline AdjacencyMatrix random_adjacency(int n, std::mt19937_64& rng) {
    std::bernoulli_distribution edge(0.6);
    std::bernoulli_distribution loop(0.3);
    IntMatrix a = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (edge(rng)) a(i, j) = a(j, i) = 1;
        }
        if (loop(rng)) a(i, i) = 1;
    }
    for (int i = 0; i < n; ++i) {
        if (a.col(i).sum() == 0) {
            const int j = (i + 1) % n;
            a(i, j) = a(j, i) = 1;
        }
    }
    return AdjacencyMatrix::from_matrix(std::move(a));
}

// Random column-stochastic matrix supported exactly on the adjacency, with
// strictly positive mass on every supported entry.
inline TransitionMatrix random_supported_transition(const AdjacencyMatrix& adjacency,
                                                    std::mt19937_64& rng) {
    const int n = adjacency.n_nodes();
    std::uniform_real_distribution<double> uni(0.1, 1.0);
    RealMatrix g = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int k : adjacency.neighbors(i)) {
            g(k, i) = uni(rng);
        }
        g.col(i) /= g.col(i).sum();
    }
    return TransitionMatrix(std::move(g));
}

// Random graph-phased data that every cast routine must accept: APR phases
// kept away from 0 so no coin degenerates toward -identity.
inline PhaseConfig random_castable_phases(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> theta(0.3, kTwoPi - 0.3);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    RealVector apr(n);
    RealMatrix link(n, n);
    for (int i = 0; i < n; ++i) {
        apr(i) = theta(rng);
        for (int j = 0; j < n; ++j) link(i, j) = angle(rng);
    }
    return PhaseConfig(std::move(apr), std::move(link));
}

}  // namespace szsim::test
