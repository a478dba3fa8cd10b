#include "szsim/coin.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>

#include "szsim/oracle.hpp"
#include "szsim/walk.hpp"

namespace szsim {

namespace {

// Amplitudes at or below this are treated as exact zeros when fixing the
// gauge and when assigning link phases (their probability is < 1e-18).
constexpr double kAmplitudeZeroTol = 1e-9;

constexpr long kEdgeSpaceLimit = 10000;

struct NodeCast {
    bool ok = false;
    double theta = 0.0;
    ComplexVector omega;  // gauge-fixed distinguished eigenvector
    std::vector<Complex> eigenvalues;
};

// Requires d-1 eigenvalues within tol of -1; the remaining one is -e^{i theta}.
NodeCast cast_coin(const ComplexMatrix& coin, double tol) {
    NodeCast result;
    const int d = static_cast<int>(coin.rows());
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(coin, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        return result;
    }
    const ComplexVector& values = solver.eigenvalues();
    result.eigenvalues.assign(values.data(), values.data() + d);

    int distinguished = -1;
    int minus_ones = 0;
    double best_separation = -1.0;
    for (int a = 0; a < d; ++a) {
        const double separation = std::abs(values(a) + Complex(1.0, 0.0));
        if (separation <= tol) {
            ++minus_ones;
        }
        if (separation > best_separation) {
            best_separation = separation;
            distinguished = a;
        }
    }
    if (minus_ones != d - 1 || best_separation <= tol) {
        return result;  // degenerate -1 eigenspace or ambiguous cluster
    }

    const Complex lambda = values(distinguished);
    result.theta = reduce_angle(std::arg(-lambda));
    ComplexVector v = solver.eigenvectors().col(distinguished);
    v.normalize();
    for (int a = 0; a < d; ++a) {
        if (std::abs(v(a)) > kAmplitudeZeroTol) {
            v *= std::conj(v(a)) / std::abs(v(a));
            break;
        }
    }
    result.omega = std::move(v);
    result.ok = true;
    return result;
}

bool is_minus_identity(const ComplexMatrix& coin, double tol) {
    return (coin + ComplexMatrix::Identity(coin.rows(), coin.cols())).cwiseAbs().maxCoeff() <=
           tol;
}

}  // namespace

void CoinSet::validate(const AdjacencyMatrix& adjacency, double tol) const {
    const int n = adjacency.n_nodes();
    if (n_nodes() != n || static_cast<int>(neighbor_order.size()) != n) {
        throw DimensionMismatch("CoinSet: expected " + std::to_string(n) + " coins");
    }
    for (int i = 0; i < n; ++i) {
        const auto expected = adjacency.neighbors(i);
        if (expected.empty()) {
            throw IsolatedNode("CoinSet: node " + std::to_string(i) + " has no edges");
        }
        if (neighbor_order[i] != expected) {
            throw ValidationError("CoinSet: neighbor_order of node " + std::to_string(i) +
                                  " must list its neighbors in ascending order");
        }
        const auto& coin = coins[i];
        const int d = static_cast<int>(expected.size());
        if (coin.rows() != d || coin.cols() != d) {
            throw DimensionMismatch("CoinSet: coin " + std::to_string(i) + " is " +
                                    std::to_string(coin.rows()) + "x" +
                                    std::to_string(coin.cols()) + " but degree is " +
                                    std::to_string(d));
        }
        const double defect =
            (coin.adjoint() * coin - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
        if (defect > tol) {
            throw NotUnitary("CoinSet: coin " + std::to_string(i) +
                             " fails unitarity by " + std::to_string(defect));
        }
    }
}

const char* to_string(LemmaClass c) {
    switch (c) {
        case LemmaClass::Standard: return "standard";
        case LemmaClass::LinkPhased: return "link-phased";
        case LemmaClass::VertexPhased: return "vertex-phased";
        case LemmaClass::GraphPhased: return "graph-phased";
        case LemmaClass::NotCastable: return "not-castable";
    }
    return "?";
}

const char* to_string(DoubleCastStatus s) {
    switch (s) {
        case DoubleCastStatus::Equivalent: return "equivalent";
        case DoubleCastStatus::NotEquivalent: return "not-equivalent";
        case DoubleCastStatus::Undetermined: return "undetermined";
    }
    return "?";
}

CastResult cast_to_szegedy(const CoinSet& coins, const AdjacencyMatrix& adjacency,
                           double tol) {
    coins.validate(adjacency);
    const int n = adjacency.n_nodes();

    RealMatrix g = RealMatrix::Zero(n, n);
    RealMatrix link = RealMatrix::Zero(n, n);
    RealVector apr(n);

    for (int i = 0; i < n; ++i) {
        NodeCast node = cast_coin(coins.coins[i], tol);
        if (!node.ok) {
            CastResult failed;
            failed.lemma_class = LemmaClass::NotCastable;
            failed.failed_node = i;
            failed.failed_eigenvalues = std::move(node.eigenvalues);
            return failed;
        }
        apr(i) = node.theta;
        const auto& order = coins.neighbor_order[i];
        for (size_t a = 0; a < order.size(); ++a) {
            const Complex amp = node.omega(static_cast<int>(a));
            g(order[a], i) = std::norm(amp);
            link(i, order[a]) =
                std::abs(amp) > kAmplitudeZeroTol ? reduce_angle(std::arg(amp)) : 0.0;
        }
    }

    bool all_theta_pi = true;
    bool all_phi_zero = true;
    for (int i = 0; i < n; ++i) {
        if (angle_distance(apr(i), kPi) > tol) all_theta_pi = false;
        for (int k : coins.neighbor_order[i]) {
            if (angle_distance(link(i, k), 0.0) > tol) all_phi_zero = false;
        }
    }

    CastResult result;
    if (all_theta_pi && all_phi_zero) {
        result.lemma_class = LemmaClass::Standard;
    } else if (all_theta_pi) {
        result.lemma_class = LemmaClass::LinkPhased;
    } else if (all_phi_zero) {
        result.lemma_class = LemmaClass::VertexPhased;
    } else {
        result.lemma_class = LemmaClass::GraphPhased;
    }
    result.g = TransitionMatrix(std::move(g));
    result.phases = PhaseConfig(std::move(apr), std::move(link));
    return result;
}

CoinSet szegedy_to_coins(const TransitionMatrix& g, const PhaseConfig& phases,
                         const AdjacencyMatrix& adjacency) {
    const int n = g.n_nodes();
    if (phases.n_nodes() != n || adjacency.n_nodes() != n) {
        throw DimensionMismatch("szegedy_to_coins: inputs must share one node count");
    }
    CoinSet out;
    out.coins.reserve(n);
    out.neighbor_order.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto neighbors = adjacency.neighbors(i);
        const int d = static_cast<int>(neighbors.size());
        double on_support = 0.0;
        for (int k : neighbors) on_support += g.prob(k, i);
        if (std::fabs(on_support - 1.0) > kStochasticTol) {
            throw IncompatibleSupport("szegedy_to_coins: column " + std::to_string(i) +
                                      " has mass outside the adjacency");
        }
        ComplexVector omega(d);
        for (int a = 0; a < d; ++a) {
            const int k = neighbors[a];
            omega(a) = std::exp(Complex(0.0, phases.link(i, k))) * std::sqrt(g.prob(k, i));
        }
        const Complex factor = 1.0 - std::exp(Complex(0.0, phases.apr(i)));
        ComplexMatrix coin = factor * (omega * omega.adjoint());
        coin -= ComplexMatrix::Identity(d, d);
        out.coins.push_back(std::move(coin));
        out.neighbor_order.push_back(std::move(neighbors));
    }
    return out;
}

DoubleCastReport check_double_castability(const CoinSet& coins,
                                          const AdjacencyMatrix& adjacency, double tol) {
    coins.validate(adjacency);
    if (!adjacency.symmetric) {
        throw ValidationError("check_double_castability: adjacency must be symmetric");
    }
    const int n = adjacency.n_nodes();

    // Arc basis of the reduced edge space, lexicographic.
    std::vector<std::pair<int, int>> arcs;
    std::vector<long> arc_index(static_cast<long>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (adjacency.a(i, j) != 0) {
                arc_index[static_cast<long>(i) * n + j] = static_cast<long>(arcs.size());
                arcs.emplace_back(i, j);
            }
        }
    }
    const long dim = static_cast<long>(arcs.size());
    if (dim > kEdgeSpaceLimit) {
        throw DimensionLimit("check_double_castability: edge space of dimension " +
                             std::to_string(dim) + " exceeds the dense-check limit");
    }

    DoubleCastReport report;
    RealMatrix g = RealMatrix::Zero(n, n);
    RealMatrix link = RealMatrix::Zero(n, n);
    RealVector apr = RealVector::Constant(n, kPi);

    for (int i = 0; i < n; ++i) {
        if (is_minus_identity(coins.coins[i], kEigenClusterTol)) {
            report.minus_identity_nodes.push_back(i);
            g(i, i) = 1.0;  // absorbing column; the -1 coin fixes no column itself
            continue;
        }
        NodeCast node = cast_coin(coins.coins[i], kEigenClusterTol);
        if (!node.ok) {
            report.status = DoubleCastStatus::Undetermined;
            report.detail = "coin " + std::to_string(i) +
                            " is neither -identity nor of phase-rotation form; general "
                            "double-step castability is undetermined";
            return report;
        }
        apr(i) = node.theta;
        const auto& order = coins.neighbor_order[i];
        for (size_t a = 0; a < order.size(); ++a) {
            const Complex amp = node.omega(static_cast<int>(a));
            g(order[a], i) = std::norm(amp);
            link(i, order[a]) =
                std::abs(amp) > kAmplitudeZeroTol ? reduce_angle(std::arg(amp)) : 0.0;
        }
    }

    TransitionMatrix base(std::move(g));
    if (!report.minus_identity_nodes.empty()) {
        MarkedSet marked;
        marked.nodes.insert(report.minus_identity_nodes.begin(),
                            report.minus_identity_nodes.end());
        base = absorb(base, marked);
    }
    const PhaseConfig phases(std::move(apr), std::move(link));
    const ComplexMatrix dense = dense_double(base, phases, base, phases).matrix;

    // Coined single step on the arc space: U_c = S_c (directsum C_i).
    ComplexMatrix uc = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
        const auto& order = coins.neighbor_order[i];
        for (size_t b = 0; b < order.size(); ++b) {
            const long col = arc_index[static_cast<long>(i) * n + order[b]];
            for (size_t a = 0; a < order.size(); ++a) {
                const long row = arc_index[static_cast<long>(order[a]) * n + i];
                uc(row, col) = coins.coins[i](static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    const ComplexMatrix w_coined = uc * uc;

    // Compare column by column; any mass the dense double operator sends
    // outside the edge space counts against the equivalence too.
    double max_diff = 0.0;
    for (long c = 0; c < dim; ++c) {
        const auto [i, j] = arcs[static_cast<size_t>(c)];
        const ComplexVector dense_col = dense.col(static_cast<long>(i) * n + j);
        for (long flat = 0; flat < dense_col.size(); ++flat) {
            const long r = arc_index[flat];
            const Complex want = r >= 0 ? w_coined(r, c) : Complex(0.0, 0.0);
            max_diff = std::max(max_diff, std::abs(dense_col(flat) - want));
        }
    }

    report.max_difference = max_diff;
    report.status =
        max_diff < tol ? DoubleCastStatus::Equivalent : DoubleCastStatus::NotEquivalent;
    report.detail = report.minus_identity_nodes.empty()
                        ? "squared coined operator vs double walk of the cast chain"
                        : "squared coined operator vs double walk with absorbing columns at "
                          "the -identity nodes";
    return report;
}

ComplexMatrix pauli_x_coin() {
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
}

ComplexMatrix hadamard_coin() {
    ComplexMatrix h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

ComplexMatrix ntilde_coin() {
    ComplexMatrix m(2, 2);
    m << 1, 1, -1, 1;
    return Complex(-0.5, -0.5) * m;
}

double hadamard_h_right() {
    return 1.0 / std::sqrt(4.0 - 2.0 * std::sqrt(2.0));
}

double hadamard_h_left() {
    return (std::sqrt(2.0) - 1.0) * hadamard_h_right();
}

CoinSet uniform_coin_set(const AdjacencyMatrix& adjacency, const ComplexMatrix& coin) {
    const int n = adjacency.n_nodes();
    CoinSet out;
    out.coins.reserve(n);
    out.neighbor_order.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto neighbors = adjacency.neighbors(i);
        if (static_cast<long>(neighbors.size()) != coin.rows()) {
            throw DimensionMismatch("uniform_coin_set: node " + std::to_string(i) +
                                    " has degree " + std::to_string(neighbors.size()) +
                                    ", coin is " + std::to_string(coin.rows()) + "-dimensional");
        }
        out.coins.push_back(coin);
        out.neighbor_order.push_back(std::move(neighbors));
    }
    return out;
}

CoinSet grover_coins(const AdjacencyMatrix& adjacency) {
    const int n = adjacency.n_nodes();
    CoinSet out;
    out.coins.reserve(n);
    out.neighbor_order.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto neighbors = adjacency.neighbors(i);
        const int d = static_cast<int>(neighbors.size());
        if (d == 0) {
            throw IsolatedNode("grover_coins: node " + std::to_string(i) + " has no edges");
        }
        ComplexMatrix coin = ComplexMatrix::Constant(d, d, Complex(2.0 / d, 0.0));
        coin -= ComplexMatrix::Identity(d, d);
        out.coins.push_back(std::move(coin));
        out.neighbor_order.push_back(std::move(neighbors));
    }
    return out;
}

CoinSet line_coin_set(int n_cycle, const ComplexMatrix& coin_right_left) {
    if (coin_right_left.rows() != 2 || coin_right_left.cols() != 2) {
        throw DimensionMismatch("line_coin_set: coin must be 2x2");
    }
    const AdjacencyMatrix adjacency = cycle_adjacency(n_cycle);
    CoinSet out;
    out.coins.reserve(n_cycle);
    out.neighbor_order.reserve(n_cycle);
    for (int i = 0; i < n_cycle; ++i) {
        const int right = (i + 1) % n_cycle;
        auto neighbors = adjacency.neighbors(i);
        ComplexMatrix coin(2, 2);
        if (neighbors[0] == right) {
            coin = coin_right_left;
        } else {
            // ascending order puts the left neighbor first
            coin(0, 0) = coin_right_left(1, 1);
            coin(0, 1) = coin_right_left(1, 0);
            coin(1, 0) = coin_right_left(0, 1);
            coin(1, 1) = coin_right_left(0, 0);
        }
        out.coins.push_back(std::move(coin));
        out.neighbor_order.push_back(std::move(neighbors));
    }
    return out;
}

}  // namespace szsim
