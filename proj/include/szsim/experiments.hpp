// Experiment runners behind the CLI: line-walk scenarios, complete-graph
// search, classical cross-checks, and the step-time scaling benchmark.
// Outputs are deterministic for a fixed config and seed; timing fields are
// the only exception.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "szsim/graph.hpp"
#include "szsim/walk.hpp"

namespace szsim {

enum class Scenario {
    LineX,
    LineHadamard,
    LineNtilde,
    LineMixed,
    SearchComplete,
    ClassicalCheck,
    ScalingBench,
    Custom,
};

Scenario scenario_from_string(const std::string& s);
std::string to_string(Scenario s);

struct RunRecord {
    // Labels of the distribution entries (signed line coordinates for line
    // scenarios, node indices otherwise).
    std::vector<long> node_labels;
    // distributions[k] is the measured distribution after k steps (k = 0 is
    // the initial state). Every row sums to 1 within kDistributionTol.
    std::vector<RealVector> distributions;
    // Wall-clock seconds per evolution step (empty for classical runs).
    std::vector<double> step_seconds;
    // (size, seconds-per-step) pairs for the scaling benchmark.
    std::vector<std::pair<int, double>> scaling_times;

    nlohmann::ordered_json metadata;
};

// t steps of U_s from (|0,1> + |0,-1>)/sqrt(2) on the auto-selected cycle;
// distributions are re-indexed to signed line coordinates.
RunRecord run_line(Scenario scenario, int t_steps);

// Complete-graph search: initial state is the uniform psi superposition of
// the unmarked graph; evolution is the double operator, with marking either
// by APR phase theta_k = 0 ("apr") or by absorbing columns ("absorb").
// One recorded step = one application of the double operator.
RunRecord run_search(int n, const std::vector<int>& marked, int steps,
                     const std::string& mode);

// Times step_single on a dense random stochastic matrix per size and fits a
// log-log slope. Sizes must be ascending.
RunRecord run_scaling(const std::vector<int>& sizes, std::uint64_t seed);

// Trajectory of G^t p0.
RunRecord run_classical_check(const TransitionMatrix& g, const RealVector& p0, int t);

// User-supplied walk; renorm_every > 0 rescales the state every that many
// steps (off by default: norm drift is diagnostic). The initial state is the
// uniform psi superposition unless one is supplied; final_out, when non-null,
// receives the post-run state.
RunRecord run_custom(const TransitionMatrix& g, const PhaseConfig& phases, int steps,
                     WalkRegister reg, int renorm_every,
                     const WalkState* initial = nullptr, WalkState* final_out = nullptr);

// sum |p - q| / 2 over matching labels.
double total_variation(const RealVector& p, const RealVector& q);

// Index of the first interior local maximum (rise then strict fall); -1 if none.
int first_local_max(const std::vector<double>& series);

// round((pi/4) sqrt(N / 2M) - 1/4): predicted peak step of the search.
int predicted_search_peak(int n, int m);

// Least-squares slope of log(seconds) vs log(size); NaN below two points.
double fit_loglog_slope(const std::vector<std::pair<int, double>>& times);

}  // namespace szsim
