#include "szsim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace szsim {

TransitionMatrix::TransitionMatrix(RealMatrix g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols() || g_.rows() < 1) {
        throw DimensionMismatch("TransitionMatrix: matrix must be square and nonempty, got " +
                                std::to_string(g_.rows()) + "x" + std::to_string(g_.cols()));
    }
    if ((g_.array() < 0.0).any() || (g_.array() > 1.0 + kStochasticTol).any()) {
        throw NotStochastic("TransitionMatrix: entries must lie in [0, 1]");
    }
    for (Eigen::Index i = 0; i < g_.cols(); ++i) {
        const double s = g_.col(i).sum();
        if (std::fabs(s - 1.0) > kStochasticTol) {
            throw NotStochastic("TransitionMatrix: column " + std::to_string(i) +
                                " sums to " + std::to_string(s));
        }
    }
}

AdjacencyMatrix AdjacencyMatrix::from_matrix(IntMatrix m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw DimensionMismatch("AdjacencyMatrix: matrix must be square and nonempty");
    }
    if (((m.array() != 0) && (m.array() != 1)).any()) {
        throw ValidationError("AdjacencyMatrix: entries must be 0 or 1");
    }
    AdjacencyMatrix a;
    a.symmetric = m.isApprox(m.transpose());
    a.a = std::move(m);
    return a;
}

int AdjacencyMatrix::degree(int i) const {
    return a.col(i).sum();
}

std::vector<int> AdjacencyMatrix::neighbors(int i) const {
    std::vector<int> out;
    for (int k = 0; k < n_nodes(); ++k) {
        if (a(i, k) != 0) out.push_back(k);
    }
    return out;
}

void MarkedSet::validate(int n) const {
    if (nodes.empty()) {
        throw InvalidNode("MarkedSet: empty set");
    }
    for (int v : nodes) {
        if (v < 0 || v >= n) {
            throw InvalidNode("MarkedSet: node " + std::to_string(v) + " outside [0, " +
                              std::to_string(n) + ")");
        }
    }
}

RealVector classical_evolve(const TransitionMatrix& g, const RealVector& p0, long t) {
    if (p0.size() != g.n_nodes()) {
        throw DimensionMismatch("classical_evolve: p0 length does not match graph");
    }
    if ((p0.array() < 0.0).any() || std::fabs(p0.sum() - 1.0) > kStochasticTol) {
        throw NotDistribution("classical_evolve: p0 is not a probability vector");
    }
    if (t < 0) {
        throw ValidationError("classical_evolve: negative time");
    }
    RealVector p = p0;
    for (long s = 0; s < t; ++s) {
        p = g.matrix() * p;
    }
    return p;
}

TransitionMatrix normalize_adjacency(const AdjacencyMatrix& a) {
    const int n = a.n_nodes();
    RealMatrix g = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int d = a.degree(i);
        if (d == 0) {
            throw IsolatedNode("normalize_adjacency: node " + std::to_string(i) +
                               " has no edges");
        }
        for (int j = 0; j < n; ++j) {
            if (a.a(j, i) != 0) g(j, i) = 1.0 / d;
        }
    }
    return TransitionMatrix(std::move(g));
}

TransitionMatrix complete_graph(int n) {
    if (n < 2) {
        throw TooSmall("complete_graph: need at least 2 nodes");
    }
    RealMatrix g = RealMatrix::Constant(n, n, 1.0 / (n - 1));
    g.diagonal().setZero();
    return TransitionMatrix(std::move(g));
}

TransitionMatrix cycle_graph(int n) {
    if (n < 2) {
        throw TooSmall("cycle_graph: need at least 2 nodes");
    }
    RealMatrix g = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        g((i + 1) % n, i) += 0.5;
        g((i - 1 + n) % n, i) += 0.5;
    }
    return TransitionMatrix(std::move(g));
}

int LineEmbedding::to_cycle(long line_coord) const {
    long r = line_coord % n_cycle;
    if (r < 0) r += n_cycle;
    return static_cast<int>(r);
}

long LineEmbedding::to_line(int cycle_index) const {
    return cycle_index < n_cycle / 2 ? cycle_index : cycle_index - n_cycle;
}

std::pair<TransitionMatrix, LineEmbedding> line_embedding(int t_steps) {
    if (t_steps < 0) {
        throw ValidationError("line_embedding: negative step count");
    }
    const long needed = 2L * t_steps + 2;
    int n = 2;
    while (n <= needed) n *= 2;
    return {cycle_graph(n), LineEmbedding{n}};
}

std::pair<TransitionMatrix, PhaseConfig> biased_line(int n_cycle, double p_right,
                                                     double p_left, double phase_left) {
    if (n_cycle < 2) {
        throw TooSmall("biased_line: need at least 2 nodes");
    }
    if (p_right < 0.0 || p_left < 0.0 || std::fabs(p_right + p_left - 1.0) > kStochasticTol) {
        throw NotStochastic("biased_line: p_right + p_left must equal 1");
    }
    RealMatrix g = RealMatrix::Zero(n_cycle, n_cycle);
    RealMatrix link = RealMatrix::Zero(n_cycle, n_cycle);
    for (int i = 0; i < n_cycle; ++i) {
        const int right = (i + 1) % n_cycle;
        const int left = (i - 1 + n_cycle) % n_cycle;
        g(right, i) += p_right;
        g(left, i) += p_left;
        link(i, left) = phase_left;
    }
    return {TransitionMatrix(std::move(g)),
            PhaseConfig(RealVector::Constant(n_cycle, kPi), std::move(link))};
}

std::pair<TransitionMatrix, PhaseConfig> mixed_parity_walk(const TransitionMatrix& g_even,
                                                           const PhaseConfig& ph_even,
                                                           const TransitionMatrix& g_odd,
                                                           const PhaseConfig& ph_odd) {
    const int n = g_even.n_nodes();
    if (g_odd.n_nodes() != n || ph_even.n_nodes() != n || ph_odd.n_nodes() != n) {
        throw DimensionMismatch("mixed_parity_walk: all inputs must share one cycle size");
    }
    RealMatrix g(n, n);
    RealMatrix link(n, n);
    RealVector apr(n);
    for (int i = 0; i < n; ++i) {
        const bool even = (i % 2 == 0);
        g.col(i) = even ? g_even.matrix().col(i) : g_odd.matrix().col(i);
        link.row(i) = even ? ph_even.link.row(i) : ph_odd.link.row(i);
        apr(i) = even ? ph_even.apr(i) : ph_odd.apr(i);
    }
    return {TransitionMatrix(std::move(g)), PhaseConfig(std::move(apr), std::move(link))};
}

TransitionMatrix absorb(const TransitionMatrix& g, const MarkedSet& marked) {
    marked.validate(g.n_nodes());
    RealMatrix out = g.matrix();
    for (int m : marked.nodes) {
        out.col(m).setZero();
        out(m, m) = 1.0;
    }
    return TransitionMatrix(std::move(out));
}

RealVector mark_apr(int n, const MarkedSet& marked, double base_phase) {
    marked.validate(n);
    RealVector apr = RealVector::Constant(n, reduce_angle(base_phase));
    for (int m : marked.nodes) {
        apr(m) = reduce_angle(marked.mark_phase);
    }
    return apr;
}

AdjacencyMatrix cycle_adjacency(int n) {
    if (n < 3) {
        throw TooSmall("cycle_adjacency: need at least 3 nodes for distinct neighbors");
    }
    IntMatrix a = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, (i + 1) % n) = 1;
        a(i, (i - 1 + n) % n) = 1;
    }
    return AdjacencyMatrix::from_matrix(std::move(a));
}

AdjacencyMatrix complete_adjacency(int n) {
    if (n < 2) {
        throw TooSmall("complete_adjacency: need at least 2 nodes");
    }
    IntMatrix a = IntMatrix::Ones(n, n);
    a.diagonal().setZero();
    return AdjacencyMatrix::from_matrix(std::move(a));
}

TransitionMatrix random_transition_matrix(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    RealMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g(j, i) = uni(rng);
        g.col(i) /= g.col(i).sum();
    }
    return TransitionMatrix(std::move(g));
}

PhaseConfig random_phase_config(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    RealVector apr(n);
    RealMatrix link(n, n);
    for (int i = 0; i < n; ++i) {
        apr(i) = angle(rng);
        for (int j = 0; j < n; ++j) link(i, j) = angle(rng);
    }
    return PhaseConfig(std::move(apr), std::move(link));
}

}  // namespace szsim
