#include "szsim/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "szsim/coin.hpp"
#include "szsim/oracle.hpp"

namespace szsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

RealVector reindex_to_line(const RealVector& by_cycle, const LineEmbedding& emb,
                           const std::vector<long>& labels) {
    RealVector out(by_cycle.size());
    for (Eigen::Index p = 0; p < out.size(); ++p) {
        out(p) = by_cycle(emb.to_cycle(labels[static_cast<size_t>(p)]));
    }
    return out;
}

}  // namespace

Scenario scenario_from_string(const std::string& s) {
    if (s == "line-x") return Scenario::LineX;
    if (s == "line-hadamard") return Scenario::LineHadamard;
    if (s == "line-ntilde") return Scenario::LineNtilde;
    if (s == "line-mixed") return Scenario::LineMixed;
    if (s == "search-complete") return Scenario::SearchComplete;
    if (s == "classical-check") return Scenario::ClassicalCheck;
    if (s == "scaling-bench") return Scenario::ScalingBench;
    if (s == "custom") return Scenario::Custom;
    throw ValidationError("unknown scenario '" + s + "'");
}

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::LineX: return "line-x";
        case Scenario::LineHadamard: return "line-hadamard";
        case Scenario::LineNtilde: return "line-ntilde";
        case Scenario::LineMixed: return "line-mixed";
        case Scenario::SearchComplete: return "search-complete";
        case Scenario::ClassicalCheck: return "classical-check";
        case Scenario::ScalingBench: return "scaling-bench";
        case Scenario::Custom: return "custom";
    }
    return "?";
}

RunRecord run_line(Scenario scenario, int t_steps) {
    if (t_steps < 1) {
        throw ValidationError("run_line: need at least one step");
    }
    auto [g_cycle, emb] = line_embedding(t_steps);
    const int n = emb.n_cycle;

    TransitionMatrix g = g_cycle;
    PhaseConfig phases = PhaseConfig::standard(n);
    switch (scenario) {
        case Scenario::LineX: {
            std::tie(g, phases) = biased_line(n, 0.5, 0.5, 0.0);
            break;
        }
        case Scenario::LineHadamard: {
            const double pr = hadamard_h_right() * hadamard_h_right();
            std::tie(g, phases) = biased_line(n, pr, 1.0 - pr, 0.0);
            break;
        }
        case Scenario::LineNtilde: {
            auto [gn, ph] = biased_line(n, 0.5, 0.5, kPi / 2.0);
            g = gn;
            phases = PhaseConfig(RealVector::Constant(n, kPi / 2.0), ph.link);
            break;
        }
        case Scenario::LineMixed: {
            const double pr = hadamard_h_right() * hadamard_h_right();
            auto [gh, ph_h] = biased_line(n, pr, 1.0 - pr, 0.0);
            auto [gn, ph_n0] = biased_line(n, 0.5, 0.5, kPi / 2.0);
            PhaseConfig ph_n(RealVector::Constant(n, kPi / 2.0), ph_n0.link);
            std::tie(g, phases) = mixed_parity_walk(gh, ph_h, gn, ph_n);
            break;
        }
        default:
            throw ValidationError("run_line: '" + to_string(scenario) +
                                  "' is not a line scenario");
    }

    const SzegedyWalk walk = build_walk(g, phases);

    // (|0>_1|1>_2 + |0>_1|-1>_2) / sqrt(2): walker at node 0.
    ComplexMatrix phi = ComplexMatrix::Zero(n, n);
    const double amp = 1.0 / std::sqrt(2.0);
    phi(emb.to_cycle(1), 0) = amp;
    phi(emb.to_cycle(-1), 0) = amp;
    WalkState state = WalkState::from_matrix(std::move(phi));

    RunRecord rec;
    rec.node_labels.resize(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) {
        rec.node_labels[static_cast<size_t>(p)] = -n / 2 + p;
    }
    rec.distributions.push_back(
        reindex_to_line(measure_register(state, WalkRegister::First), emb, rec.node_labels));
    for (int s = 1; s <= t_steps; ++s) {
        const auto t0 = Clock::now();
        state = step_single(std::move(state), walk);
        rec.step_seconds.push_back(seconds_since(t0));
        rec.distributions.push_back(reindex_to_line(
            measure_register(state, WalkRegister::First), emb, rec.node_labels));
    }

    rec.metadata["scenario"] = to_string(scenario);
    rec.metadata["library_version"] = kVersion;
    rec.metadata["steps"] = t_steps;
    rec.metadata["cycle_nodes"] = n;
    rec.metadata["initial_state"] = "(|0,1> + |0,-1>)/sqrt(2)";
    rec.metadata["step_operator"] = "single";
    rec.metadata["register"] = "first";
    return rec;
}

RunRecord run_search(int n, const std::vector<int>& marked, int steps,
                     const std::string& mode) {
    if (steps < 1) {
        throw ValidationError("run_search: need at least one step");
    }
    MarkedSet mset;
    mset.nodes.insert(marked.begin(), marked.end());
    mset.mark_phase = 0.0;
    mset.validate(n);

    const TransitionMatrix g0 = complete_graph(n);
    SzegedyWalk walk;
    if (mode == "apr") {
        walk = build_walk(g0, PhaseConfig::with_apr(mark_apr(n, mset)));
    } else if (mode == "absorb") {
        walk = build_walk(absorb(g0, mset), PhaseConfig::standard(n));
    } else {
        throw ValidationError("run_search: mode must be 'apr' or 'absorb'");
    }

    // The initial state comes from the unmarked graph in both modes.
    WalkState state = initial_uniform_psi(build_walk(g0, PhaseConfig::standard(n)));

    RunRecord rec;
    rec.node_labels.resize(static_cast<size_t>(n));
    std::iota(rec.node_labels.begin(), rec.node_labels.end(), 0L);

    std::vector<double> marked_probability;
    auto record = [&](const RealVector& dist) {
        double p = 0.0;
        for (int m : mset.nodes) p += dist(m);
        marked_probability.push_back(p);
        rec.distributions.push_back(dist);
    };

    record(measure_register(state, WalkRegister::First));
    for (int s = 1; s <= steps; ++s) {
        const auto t0 = Clock::now();
        state = step_double(std::move(state), walk, walk);
        rec.step_seconds.push_back(seconds_since(t0));
        record(measure_register(state, WalkRegister::First));
    }

    const int m = static_cast<int>(mset.nodes.size());
    rec.metadata["scenario"] = "search-complete";
    rec.metadata["library_version"] = kVersion;
    rec.metadata["n"] = n;
    rec.metadata["marked"] = std::vector<int>(mset.nodes.begin(), mset.nodes.end());
    rec.metadata["mode"] = mode;
    rec.metadata["steps"] = steps;
    // One recorded step is one application of the double operator W_s.
    rec.metadata["step_operator"] = "double";
    rec.metadata["register"] = "first";
    rec.metadata["marked_probability"] = marked_probability;
    rec.metadata["first_peak_step"] = first_local_max(marked_probability);
    rec.metadata["predicted_peak_step"] = predicted_search_peak(n, m);
    if (n <= 2 * m) {
        rec.metadata["predicted_peak_note"] =
            "prediction assumes 2M << N; out of regime for this input";
    }
    return rec;
}

RunRecord run_scaling(const std::vector<int>& sizes, std::uint64_t seed) {
    if (sizes.empty()) {
        throw ValidationError("run_scaling: no sizes given");
    }
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw ValidationError("run_scaling: sizes must be ascending");
    }
    RunRecord rec;
    std::vector<int> reps_used;
    for (int size : sizes) {
        if (size < 2) {
            throw ValidationError("run_scaling: sizes must be >= 2");
        }
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(size));
        const TransitionMatrix g = random_transition_matrix(size, rng);
        const SzegedyWalk walk = build_walk(g, random_phase_config(size, rng));
        WalkState state = initial_uniform_psi(walk);

        // Warm-up, then pick a repetition count that keeps each size around
        // ~150 ms of measurement so the median is stable.
        state = step_single(std::move(state), walk);
        auto t0 = Clock::now();
        state = step_single(std::move(state), walk);
        const double est = std::max(seconds_since(t0), 1e-9);
        const int reps = std::clamp(static_cast<int>(0.15 / est), 7, 8000);

        std::vector<double> times;
        times.reserve(static_cast<size_t>(reps));
        for (int r = 0; r < reps; ++r) {
            t0 = Clock::now();
            state = step_single(std::move(state), walk);
            times.push_back(seconds_since(t0));
        }
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        rec.scaling_times.emplace_back(size, times[times.size() / 2]);
        reps_used.push_back(reps);
    }

    rec.metadata["scenario"] = "scaling-bench";
    rec.metadata["library_version"] = kVersion;
    rec.metadata["sizes"] = sizes;
    rec.metadata["seed"] = seed;
    rec.metadata["repetitions"] = reps_used;
    const double slope = fit_loglog_slope(rec.scaling_times);
    if (std::isnan(slope)) {
        rec.metadata["loglog_slope"] = nullptr;
        rec.metadata["loglog_slope_note"] = "undefined below two sizes";
    } else {
        rec.metadata["loglog_slope"] = slope;
    }
    return rec;
}

RunRecord run_classical_check(const TransitionMatrix& g, const RealVector& p0, int t) {
    if (t < 0) {
        throw ValidationError("run_classical_check: negative time");
    }
    RunRecord rec;
    const int n = g.n_nodes();
    rec.node_labels.resize(static_cast<size_t>(n));
    std::iota(rec.node_labels.begin(), rec.node_labels.end(), 0L);

    RealVector p = classical_evolve(g, p0, 0);  // validates p0
    rec.distributions.push_back(p);
    for (int s = 1; s <= t; ++s) {
        p = g.matrix() * p;
        rec.distributions.push_back(p);
    }
    rec.metadata["scenario"] = "classical-check";
    rec.metadata["library_version"] = kVersion;
    rec.metadata["steps"] = t;
    rec.metadata["n"] = n;
    return rec;
}

RunRecord run_custom(const TransitionMatrix& g, const PhaseConfig& phases, int steps,
                     WalkRegister reg, int renorm_every, const WalkState* initial,
                     WalkState* final_out) {
    if (steps < 0) {
        throw ValidationError("run_custom: negative step count");
    }
    const SzegedyWalk walk = build_walk(g, phases);
    if (initial && initial->n_nodes() != g.n_nodes()) {
        throw DimensionMismatch("run_custom: initial state size does not match graph");
    }
    WalkState state = initial ? *initial : initial_uniform_psi(walk);

    RunRecord rec;
    const int n = g.n_nodes();
    rec.node_labels.resize(static_cast<size_t>(n));
    std::iota(rec.node_labels.begin(), rec.node_labels.end(), 0L);

    rec.distributions.push_back(measure_register(state, reg));
    for (int s = 1; s <= steps; ++s) {
        const auto t0 = Clock::now();
        state = step_single(std::move(state), walk);
        if (renorm_every > 0 && s % renorm_every == 0) {
            state = WalkState::from_matrix_renormalized(state.matrix());
        }
        rec.step_seconds.push_back(seconds_since(t0));
        rec.distributions.push_back(measure_register(state, reg));
    }
    rec.metadata["scenario"] = "custom";
    rec.metadata["library_version"] = kVersion;
    rec.metadata["steps"] = steps;
    rec.metadata["n"] = n;
    rec.metadata["register"] = reg == WalkRegister::First ? "first" : "second";
    rec.metadata["renorm_every"] = renorm_every;
    rec.metadata["initial_state"] = initial ? "user-supplied" : "uniform-psi";
    rec.metadata["step_operator"] = "single";
    if (final_out) {
        *final_out = state;
    }
    return rec;
}

double total_variation(const RealVector& p, const RealVector& q) {
    if (p.size() != q.size()) {
        throw DimensionMismatch("total_variation: length mismatch");
    }
    return 0.5 * (p - q).cwiseAbs().sum();
}

int first_local_max(const std::vector<double>& series) {
    for (size_t k = 1; k + 1 < series.size(); ++k) {
        if (series[k] >= series[k - 1] && series[k] > series[k + 1]) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

int predicted_search_peak(int n, int m) {
    if (n < 1 || m < 1) {
        throw ValidationError("predicted_search_peak: need n, m >= 1");
    }
    const double t = kPi / 4.0 * std::sqrt(static_cast<double>(n) / (2.0 * m)) - 0.25;
    return static_cast<int>(std::llround(t));
}

double fit_loglog_slope(const std::vector<std::pair<int, double>>& times) {
    if (times.size() < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double mx = 0.0, my = 0.0;
    for (const auto& [size, sec] : times) {
        mx += std::log(static_cast<double>(size));
        my += std::log(sec);
    }
    mx /= static_cast<double>(times.size());
    my /= static_cast<double>(times.size());
    double num = 0.0, den = 0.0;
    for (const auto& [size, sec] : times) {
        const double dx = std::log(static_cast<double>(size)) - mx;
        num += dx * (std::log(sec) - my);
        den += dx * dx;
    }
    return num / den;
}

}  // namespace szsim
