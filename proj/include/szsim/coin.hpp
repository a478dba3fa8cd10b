// Coined-walk side: per-node coin operators, classification against the
// castability hierarchy, and bidirectional conversion with Szegedy data.
//
// A coin set is castable when every coin has d_i - 1 eigenvalues equal to -1
// and a single distinguished eigenvalue -e^{i theta_i}; the distinguished
// eigenvector yields the transition column (squared moduli) and the link
// phases (arguments).

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "szsim/graph.hpp"
#include "szsim/phases.hpp"
#include "szsim/types.hpp"

namespace szsim {

struct CoinSet {
    std::vector<ComplexMatrix> coins;              // coin i is d_i x d_i
    std::vector<std::vector<int>> neighbor_order;  // ascending neighbors of node i

    int n_nodes() const { return static_cast<int>(coins.size()); }

    // NotUnitary / DimensionMismatch when a coin fails C^dagger C = 1 within
    // tol or its dimension is not the node degree.
    void validate(const AdjacencyMatrix& adjacency, double tol = kUnitaryTol) const;
};

enum class LemmaClass {
    Standard,      // theta_i = pi everywhere, no link phases
    LinkPhased,    // theta_i = pi everywhere
    VertexPhased,  // no link phases
    GraphPhased,   // both extensions
    NotCastable,
};

const char* to_string(LemmaClass c);

struct CastResult {
    LemmaClass lemma_class = LemmaClass::NotCastable;
    std::optional<TransitionMatrix> g;
    std::optional<PhaseConfig> phases;

    // Populated for NotCastable: the offending node and its eigenvalue multiset.
    int failed_node = -1;
    std::vector<Complex> failed_eigenvalues;

    bool castable() const { return lemma_class != LemmaClass::NotCastable; }
};

// Eigendecomposes every coin and classifies into the most restrictive class.
// The distinguished eigenvector is gauge-fixed so its first nonzero amplitude
// (in neighbor order) is real positive; this defines the canonical phi.
// tol decides "eigenvalue equals -1" (near-degenerate coins are
// classification-unstable, so it is exposed).
CastResult cast_to_szegedy(const CoinSet& coins, const AdjacencyMatrix& adjacency,
                           double tol = kEigenClusterTol);

// Coin i = (1 - e^{i theta_i}) |omega><omega| - 1 restricted to the neighbor
// space, with omega_k = e^{i phi(i,k)} sqrt(G(k,i)). IncompatibleSupport if g
// carries mass outside the adjacency. Ghost directed edges (zero probability
// on an existing undirected edge) stay in the coin space.
CoinSet szegedy_to_coins(const TransitionMatrix& g, const PhaseConfig& phases,
                         const AdjacencyMatrix& adjacency);

enum class DoubleCastStatus { Equivalent, NotEquivalent, Undetermined };

const char* to_string(DoubleCastStatus s);

struct DoubleCastReport {
    DoubleCastStatus status = DoubleCastStatus::Undetermined;
    std::vector<int> minus_identity_nodes;
    double max_difference = std::numeric_limits<double>::quiet_NaN();
    std::string detail;
};

// For coin sets made of phase-rotation-form coins plus -1 coins: squares the
// coined operator on the reduced edge space and compares it against the
// double operator of the absorbing-vertex walk. Arbitrary coins are reported
// Undetermined. DimensionLimit when the edge space exceeds 10^4.
DoubleCastReport check_double_castability(const CoinSet& coins,
                                          const AdjacencyMatrix& adjacency,
                                          double tol = 1e-10);

// Named 2x2 coins in the (right, left) basis of the line.
ComplexMatrix pauli_x_coin();
ComplexMatrix hadamard_coin();
ComplexMatrix ntilde_coin();

double hadamard_h_right();  // 1/sqrt(4 - 2 sqrt(2))
double hadamard_h_left();   // (sqrt(2) - 1) * hadamard_h_right()

// Same d_i-dimensional coin at every node of a regular graph.
CoinSet uniform_coin_set(const AdjacencyMatrix& adjacency, const ComplexMatrix& coin);

// Grover diffusion coins: entries 2/d_i - delta_ab.
CoinSet grover_coins(const AdjacencyMatrix& adjacency);

// A 2x2 coin given in the (right, left) basis placed on every node of an
// n-cycle, permuted into each node's ascending neighbor order.
CoinSet line_coin_set(int n_cycle, const ComplexMatrix& coin_right_left);

}  // namespace szsim
