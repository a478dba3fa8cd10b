// File formats: graph / coin-set / state-snapshot JSON inputs, CSV and JSON
// run outputs. All writes are atomic (temp file + rename).

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "szsim/coin.hpp"
#include "szsim/experiments.hpp"
#include "szsim/graph.hpp"
#include "szsim/walk.hpp"

namespace szsim {

struct GraphInput {
    TransitionMatrix g;
    PhaseConfig phases;
};

// { "n": N, "edges": [[from, to, prob], ...],
//   "link_phases": [[i, j, radians], ...]  (optional; edge state |i>_1|j>_2),
//   "apr": [theta_0, ...]                  (optional; defaults to pi) }
// The matrix is reconstructed column-stochastic and validated.
GraphInput load_graph_json(const std::string& path);
GraphInput graph_from_json(const nlohmann::json& j);

struct CoinInput {
    CoinSet coins;
    AdjacencyMatrix adjacency;
};

// { "n": N, "edges": [[i, j], ...]  (undirected; i == j is a self-loop),
//   "coins": [ d_i x d_i matrix of [re, im], ... ] } with coin basis in
// ascending neighbor order.
CoinInput load_coins_json(const std::string& path);
CoinInput coins_from_json(const nlohmann::json& j);

// { "n": N, "amplitudes": [[first, second, re, im], ...] } (nonzero entries).
void save_state_json(const WalkState& state, const std::string& path);
WalkState load_state_json(const std::string& path);

void write_text_atomic(const std::string& path, const std::string& content);

// Header "step,node,probability"; one row per (step, node). Verifies each
// distribution sums to 1 within kDistributionTol.
std::string distribution_csv(const RunRecord& rec);

// Header "size,seconds".
std::string scaling_csv(const RunRecord& rec);

nlohmann::ordered_json run_to_json(const RunRecord& rec, bool include_distributions);

// format "csv": tabular data at out_path plus a <out_path>.meta.json sidecar.
// format "json": single JSON document with metadata and data.
void write_run(const RunRecord& rec, const std::string& out_path, const std::string& format);

}  // namespace szsim
