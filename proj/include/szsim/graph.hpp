// Classical side of the walk: column-stochastic transition matrices,
// adjacency normalization, named graph families, node marking, and the
// classical Markov evolution used for cross-checks.

#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "szsim/errors.hpp"
#include "szsim/phases.hpp"
#include "szsim/types.hpp"

namespace szsim {

// Column-stochastic N x N matrix G; G(j, i) is the probability of jumping
// from node i to node j. Columns must sum to 1 within kStochasticTol and all
// entries must lie in [0, 1]; out-of-tolerance inputs are rejected, never
// silently renormalized.
class TransitionMatrix {
public:
    explicit TransitionMatrix(RealMatrix g);

    int n_nodes() const { return static_cast<int>(g_.rows()); }
    const RealMatrix& matrix() const { return g_; }
    double prob(int to, int from) const { return g_(to, from); }

private:
    RealMatrix g_;
};

// 0/1 adjacency; diagonal entries are self-loops. The symmetric flag records
// whether the matrix equals its transpose (undirected graph).
struct AdjacencyMatrix {
    IntMatrix a;
    bool symmetric = false;

    static AdjacencyMatrix from_matrix(IntMatrix m);

    int n_nodes() const { return static_cast<int>(a.rows()); }
    int degree(int i) const;                 // column sum
    std::vector<int> neighbors(int i) const; // ascending k with a(i, k) == 1
};

// Nodes to mark plus the APR phase they evolve with.
struct MarkedSet {
    std::set<int> nodes;
    double mark_phase = 0.0;

    void validate(int n) const;  // InvalidNode on out-of-range or empty set
};

// p(t) = G^t p(0), by repeated multiplication.
RealVector classical_evolve(const TransitionMatrix& g, const RealVector& p0, long t);

// G(j, i) = A(j, i) / degree(i). IsolatedNode if any column of A is all zero.
TransitionMatrix normalize_adjacency(const AdjacencyMatrix& a);

// Complete graph without loops: off-diagonal 1/(N-1), diagonal 0. TooSmall for n < 2.
TransitionMatrix complete_graph(int n);

// Cycle with wraparound: from node i, probability 1/2 to each of i+-1 (mod n).
TransitionMatrix cycle_graph(int n);

// Signed line coordinates embedded in a cycle. Node 0 sits at index 0 and
// negative nodes wrap downward from n_cycle - 1.
struct LineEmbedding {
    int n_cycle = 0;

    int to_cycle(long line_coord) const;
    long to_line(int cycle_index) const;  // range [-n/2, n/2 - 1]
};

// Picks the smallest power of two > 2*t_steps + 2, so a wavefront started at
// node 0 cannot self-interfere within t_steps steps.
std::pair<TransitionMatrix, LineEmbedding> line_embedding(int t_steps);

// Cycle-embedded biased line: probability p_right to node i+1, p_left to node
// i-1, link phase phase_left on every leftward edge state |i>_1 |i-1>_2.
// APR defaults to pi everywhere.
std::pair<TransitionMatrix, PhaseConfig> biased_line(int n_cycle, double p_right,
                                                     double p_left, double phase_left);

// Parity-mixed chain: even columns / rows / apr entries from the even chain,
// odd ones from the odd chain.
std::pair<TransitionMatrix, PhaseConfig> mixed_parity_walk(const TransitionMatrix& g_even,
                                                           const PhaseConfig& ph_even,
                                                           const TransitionMatrix& g_odd,
                                                           const PhaseConfig& ph_odd);

// Absorbing-vertex marking: columns of marked nodes become the standard basis
// vector e_i (self-loop sinks); unmarked columns are untouched.
TransitionMatrix absorb(const TransitionMatrix& g, const MarkedSet& marked);

// APR marking: base_phase everywhere, marked.mark_phase at marked indices.
RealVector mark_apr(int n, const MarkedSet& marked, double base_phase = kPi);

// Cycle and loop-free complete adjacencies, for pairing with coin sets.
AdjacencyMatrix cycle_adjacency(int n);
AdjacencyMatrix complete_adjacency(int n);

// Dense strictly-positive column-stochastic matrix (scaling runs, property tests).
TransitionMatrix random_transition_matrix(int n, std::mt19937_64& rng);

// Random angles in [0, 2*pi).
PhaseConfig random_phase_config(int n, std::mt19937_64& rng);

}  // namespace szsim
