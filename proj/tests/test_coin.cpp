#include <doctest.h>

#include <random>

#include "szsim/coin.hpp"
#include "szsim/oracle.hpp"
#include "test_support.hpp"

using namespace szsim;
using namespace szsim::test;

namespace {

double max_coin_diff(const CoinSet& a, const CoinSet& b) {
    double diff = 0.0;
    for (int i = 0; i < a.n_nodes(); ++i) {
        diff = std::max(diff, (a.coins[static_cast<size_t>(i)] -
                               b.coins[static_cast<size_t>(i)]).cwiseAbs().maxCoeff());
    }
    return diff;
}

}  // namespace

TEST_CASE("Pauli X coins cast to the standard unbiased chain") {
    const int n = 8;
    const CoinSet coins = line_coin_set(n, pauli_x_coin());
    const CastResult result = cast_to_szegedy(coins, cycle_adjacency(n));
    REQUIRE(result.castable());
    CHECK(result.lemma_class == LemmaClass::Standard);
    const TransitionMatrix gu = cycle_graph(n);
    CHECK((result.g->matrix() - gu.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    for (int i = 0; i < n; ++i) {
        CHECK(angle_distance(result.phases->apr(i), kPi) < 1e-12);
    }
    CHECK(result.phases->link.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Hadamard coins cast to the right-biased chain") {
    const int n = 8;
    const CoinSet coins = line_coin_set(n, hadamard_coin());
    const CastResult result = cast_to_szegedy(coins, cycle_adjacency(n));
    REQUIRE(result.castable());
    CHECK(result.lemma_class == LemmaClass::Standard);
    const double pr = 1.0 / (4.0 - 2.0 * std::sqrt(2.0));
    for (int i = 0; i < n; ++i) {
        CHECK(result.g->prob((i + 1) % n, i) == doctest::Approx(pr).epsilon(1e-12));
        CHECK(result.g->prob((i + n - 1) % n, i) == doctest::Approx(1.0 - pr).epsilon(1e-12));
        CHECK(angle_distance(result.phases->apr(i), kPi) < 1e-10);
    }
}

TEST_CASE("Ntilde coins cast to the graph-phased unbiased chain") {
    const int n = 8;
    const CoinSet coins = line_coin_set(n, ntilde_coin());
    const CastResult result = cast_to_szegedy(coins, cycle_adjacency(n));
    REQUIRE(result.castable());
    CHECK(result.lemma_class == LemmaClass::GraphPhased);
    const TransitionMatrix gu = cycle_graph(n);
    CHECK((result.g->matrix() - gu.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    for (int i = 0; i < n; ++i) {
        CHECK(angle_distance(result.phases->apr(i), kPi / 2.0) < 1e-10);
        // the canonical gauge can shift whole rows of phi; the leftward-vs-
        // rightward offset of pi/2 is gauge-invariant
        const double left = result.phases->link(i, (i + n - 1) % n);
        const double right = result.phases->link(i, (i + 1) % n);
        CHECK(angle_distance(left - right, kPi / 2.0) < 1e-10);
    }
    const CoinSet rebuilt = szegedy_to_coins(*result.g, *result.phases, cycle_adjacency(n));
    CHECK(max_coin_diff(rebuilt, coins) < 1e-10);
}

TEST_CASE("-identity coins are not castable in a single step") {
    const int n = 6;
    const CoinSet coins = line_coin_set(n, ComplexMatrix(-ComplexMatrix::Identity(2, 2)));
    const CastResult result = cast_to_szegedy(coins, cycle_adjacency(n));
    CHECK_FALSE(result.castable());
    CHECK(result.lemma_class == LemmaClass::NotCastable);
    CHECK(result.failed_node == 0);
    REQUIRE(result.failed_eigenvalues.size() == 2);
    for (const Complex& l : result.failed_eigenvalues) {
        CHECK(std::abs(l  - Complex(-1.0, 0.0)) < 1e-12);
    }
    CHECK_FALSE(result.g.has_value());
}

TEST_CASE("non-unitary coins are rejected") {
    CoinSet coins = line_coin_set(4, pauli_x_coin());
    coins.coins[2](0, 0) = 0.5;
    CHECK_THROWS_AS(cast_to_szegedy(coins, cycle_adjacency(4)), NotUnitary);
}

TEST_CASE("uniform 2-regular standard walk turns into Pauli X coins") {
    const int n = 6;
    const CoinSet coins =
        szegedy_to_coins(cycle_graph(n), PhaseConfig::standard(n), cycle_adjacency(n));
    for (int i = 0; i < n; ++i) {
        CHECK((coins.coins[static_cast<size_t>(i)] - pauli_x_coin()).cwiseAbs().maxCoeff() <
              1e-14);
    }
}

TEST_CASE("standard complete-graph walk turns into Grover coins") {
    const int n = 5;
    const CoinSet coins = szegedy_to_coins(complete_graph(n), PhaseConfig::standard(n),
                                           complete_adjacency(n));
    for (int i = 0; i < n; ++i) {
        const int d = n - 1;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                const double want = 2.0 / d - (a == b ? 1.0 : 0.0);
                CHECK(std::abs(coins.coins[static_cast<size_t>(i)](a, b) - want) < 1e-14);
            }
        }
    }
}

TEST_CASE("mass outside the adjacency is rejected") {
    CHECK_THROWS_AS(
        szegedy_to_coins(complete_graph(4), PhaseConfig::standard(4), cycle_adjacency(4)),
        IncompatibleSupport);
}

TEST_CASE("ghost directed edges stay in the coin space") {
    // an undirected edge whose reverse probability is zero still contributes
    // a coin dimension
    RealMatrix g(3, 3);
    g << 0.0, 0.5, 1.0,
         0.4, 0.0, 0.0,
         0.6, 0.5, 0.0;
    IntMatrix a(3, 3);
    a << 0, 1, 1,
         1, 0, 1,
         1, 1, 0;
    const CoinSet coins = szegedy_to_coins(TransitionMatrix{g}, PhaseConfig::standard(3),
                                           AdjacencyMatrix::from_matrix(a));
    // node 2 keeps a 2-dimensional coin although G(1,2) = 0
    CHECK(coins.coins[2].rows() == 2);
    const double defect = (coins.coins[2].adjoint() * coins.coins[2] -
                           ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
    CHECK(defect < 1e-12);
    // and the cast walks back to the same chain
    const CastResult round = cast_to_szegedy(coins, AdjacencyMatrix::from_matrix(a));
    REQUIRE(round.castable());
    CHECK((round.g->matrix() - g).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("property: round trip over random castable instances") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const AdjacencyMatrix adjacency = random_adjacency(n, rng);
        const TransitionMatrix g = random_supported_transition(adjacency, rng);
        const PhaseConfig phases = random_castable_phases(n, rng);

        const CoinSet coins = szegedy_to_coins(g, phases, adjacency);
        const CastResult cast = cast_to_szegedy(coins, adjacency);
        REQUIRE(cast.castable());

        CHECK((cast.g->matrix() - g.matrix()).cwiseAbs().maxCoeff() < 1e-8);
        for (int i = 0; i < n; ++i) {
            CHECK(angle_distance(cast.phases->apr(i), phases.apr(i)) < 1e-8);
            // link phases agree up to one gauge constant per row
            const auto neighbors = adjacency.neighbors(i);
            for (size_t x = 0; x + 1 < neighbors.size(); ++x) {
                const int k = neighbors[x];
                const int l = neighbors[x + 1];
                CHECK(angle_distance(cast.phases->link(i, k) - cast.phases->link(i, l),
                                     phases.link(i, k) - phases.link(i, l)) < 1e-8);
            }
        }

        const CoinSet rebuilt = szegedy_to_coins(*cast.g, *cast.phases, adjacency);
        CHECK(max_coin_diff(rebuilt, coins) < 1e-8);

        // probability completeness of the reconstructed columns
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(cast.g->matrix().col(i).sum() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("property: eigenvalue product equals the determinant budget") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const AdjacencyMatrix adjacency = random_adjacency(n, rng);
        const TransitionMatrix g = random_supported_transition(adjacency, rng);
        const PhaseConfig phases = random_castable_phases(n, rng);
        const CoinSet coins = szegedy_to_coins(g, phases, adjacency);
        for (int i = 0; i < n; ++i) {
            const auto& coin = coins.coins[static_cast<size_t>(i)];
            const long d = coin.rows();
            const Complex det = coin.determinant();
            const Complex want = (d % 2 == 0 ? -1.0 : 1.0) *
                                 (-std::exp(Complex(0.0, phases.apr(i))));
            // (-1)^(d-1) * (-e^{i theta})
            CHECK(std::abs(det - want) < 1e-10);
        }
    }
}

TEST_CASE("property: gauge phases on the distinguished eigenvector are inert") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const AdjacencyMatrix adjacency = random_adjacency(n, rng);
        const TransitionMatrix g = random_supported_transition(adjacency, rng);
        const PhaseConfig phases = random_castable_phases(n, rng);

        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        RealMatrix shifted_link = phases.link;
        RealVector offsets(n);
        for (int i = 0; i < n; ++i) {
            offsets(i) = angle(rng);
            shifted_link.row(i).array() += offsets(i);
        }
        const PhaseConfig shifted(phases.apr, shifted_link);

        const CoinSet coins = szegedy_to_coins(g, phases, adjacency);
        const CoinSet coins_shifted = szegedy_to_coins(g, shifted, adjacency);
        CHECK(max_coin_diff(coins, coins_shifted) < 1e-10);

        // walk dynamics are identical as well
        const SzegedyWalk w1 = build_walk(g, phases);
        const SzegedyWalk w2 = build_walk(g, shifted);
        const WalkState state = random_state(n, rng);
        CHECK(max_abs_diff(step_single(state, w1).matrix(),
                           step_single(state, w2).matrix()) < 1e-12);
    }
}

TEST_CASE("double-step equivalence for -identity marked complete graph") {
    const int n = 8;
    const AdjacencyMatrix adjacency = complete_adjacency(n);
    CoinSet coins = grover_coins(adjacency);
    for (int m : {3, 5}) {
        coins.coins[static_cast<size_t>(m)] =
            -ComplexMatrix::Identity(n - 1, n - 1);
    }
    const DoubleCastReport report = check_double_castability(coins, adjacency);
    CHECK(report.status == DoubleCastStatus::Equivalent);
    CHECK(report.minus_identity_nodes == std::vector<int>{3, 5});
    CHECK(report.max_difference < 1e-10);
}

TEST_CASE("double-step equivalence holds for general phase-rotation coins") {
    std::mt19937_64 rng(151);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        IntMatrix a = IntMatrix::Ones(n, n);
        a.diagonal().setZero();
        const AdjacencyMatrix adjacency = AdjacencyMatrix::from_matrix(std::move(a));
        const TransitionMatrix g = random_supported_transition(adjacency, rng);
        const PhaseConfig phases = random_castable_phases(n, rng);
        CoinSet coins = szegedy_to_coins(g, phases, adjacency);
        const int marked = static_cast<int>(rng() % n);
        coins.coins[static_cast<size_t>(marked)] =
            -ComplexMatrix::Identity(n - 1, n - 1);

        const DoubleCastReport report = check_double_castability(coins, adjacency);
        CHECK(report.status == DoubleCastStatus::Equivalent);
        CHECK(report.minus_identity_nodes == std::vector<int>{marked});
        CHECK(report.max_difference < 1e-10);
    }
}

TEST_CASE("double-step check with no marks is trivially equivalent") {
    const int n = 6;
    const AdjacencyMatrix adjacency = complete_adjacency(n);
    const DoubleCastReport report = check_double_castability(grover_coins(adjacency), adjacency);
    CHECK(report.status == DoubleCastStatus::Equivalent);
    CHECK(report.minus_identity_nodes.empty());
    CHECK(report.max_difference < 1e-10);
}

TEST_CASE("double-step check reports arbitrary coins as undetermined") {
    const int n = 4;
    const AdjacencyMatrix adjacency = cycle_adjacency(n);
    CoinSet coins = line_coin_set(n, pauli_x_coin());
    // a generic unitary: two eigenvalues away from -1
    ComplexMatrix odd(2, 2);
    odd << Complex(0.0, 1.0), 0.0,
           0.0, Complex(0.0, -1.0);
    coins.coins[1] = odd;
    const DoubleCastReport report = check_double_castability(coins, adjacency);
    CHECK(report.status == DoubleCastStatus::Undetermined);
    CHECK(report.detail.find("coin 1") != std::string::npos);
}

TEST_CASE("double-step check enforces the edge-space limit") {
    const int n = 101;  // 101 * 100 arcs > 10^4
    const AdjacencyMatrix adjacency = complete_adjacency(n);
    CHECK_THROWS_AS(check_double_castability(grover_coins(adjacency), adjacency),
                    DimensionLimit);
}

TEST_CASE("single step differs from the absorbing walk only on marked self-loops") {
    const int n = 6;
    const TransitionMatrix g = complete_graph(n);
    const int m = 2;
    MarkedSet marked;
    marked.nodes = {m};
    marked.mark_phase = 0.0;

    const DenseOperator u_apr =
        dense_unitary(g, PhaseConfig::with_apr(mark_apr(n, marked)));
    const DenseOperator u_abs = dense_unitary(absorb(g, marked), PhaseConfig::standard(n));

    const long dim = static_cast<long>(n) * n;
    const long loop = static_cast<long>(m) * n + m;

    // sign flip on the marked self-loop, identical elsewhere
    ComplexMatrix expected = u_abs.matrix;
    expected.col(loop) *= -1.0;
    CHECK(max_abs_diff(u_apr.matrix, expected) < 1e-12);

    // as operators they are far apart on the self-loop basis state
    CHECK((u_apr.matrix.col(loop) - u_abs.matrix.col(loop)).cwiseAbs().maxCoeff() > 0.1);

    // the squares coincide
    const ComplexMatrix sq_apr = u_apr.matrix * u_apr.matrix;
    const ComplexMatrix sq_abs = u_abs.matrix * u_abs.matrix;
    CHECK(max_abs_diff(sq_apr, sq_abs) < 1e-12);
    (void)dim;
}

TEST_CASE("coin set validation catches shape mismatches") {
    CoinSet coins = line_coin_set(5, pauli_x_coin());
    coins.coins[1] = ComplexMatrix::Identity(3, 3);
    CHECK_THROWS_AS(coins.validate(cycle_adjacency(5)), DimensionMismatch);

    CoinSet reordered = line_coin_set(5, pauli_x_coin());
    std::swap(reordered.neighbor_order[2][0], reordered.neighbor_order[2][1]);
    CHECK_THROWS_AS(reordered.validate(cycle_adjacency(5)), ValidationError);

    // isolated node: no coin space to validate against
    IntMatrix lonely = IntMatrix::Zero(3, 3);
    lonely(0, 1) = lonely(1, 0) = 1;
    CoinSet stray;
    stray.coins = {ComplexMatrix(-ComplexMatrix::Identity(1, 1)),
                   ComplexMatrix(-ComplexMatrix::Identity(1, 1)), ComplexMatrix(0, 0)};
    stray.neighbor_order = {{1}, {0}, {}};
    CHECK_THROWS_AS(stray.validate(AdjacencyMatrix::from_matrix(lonely)), IsolatedNode);
}
