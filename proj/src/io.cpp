#include "szsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace szsim {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
}

}  // namespace

GraphInput graph_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 1) {
            throw ValidationError("graph JSON: n must be positive");
        }
        RealMatrix g = RealMatrix::Zero(n, n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3) {
                throw ValidationError("graph JSON: edges must be [from, to, prob] triples");
            }
            const int from = e[0].get<int>();
            const int to = e[1].get<int>();
            if (from < 0 || from >= n || to < 0 || to >= n) {
                throw InvalidNode("graph JSON: edge endpoint outside [0, n)");
            }
            g(to, from) += e[2].get<double>();  // duplicate triples accumulate
        }
        RealMatrix link = RealMatrix::Zero(n, n);
        if (j.contains("link_phases")) {
            for (const auto& e : j.at("link_phases")) {
                if (!e.is_array() || e.size() != 3) {
                    throw ValidationError(
                        "graph JSON: link_phases must be [i, j, radians] triples");
                }
                const int i = e[0].get<int>();
                const int k = e[1].get<int>();
                if (i < 0 || i >= n || k < 0 || k >= n) {
                    throw InvalidNode("graph JSON: link phase endpoint outside [0, n)");
                }
                link(i, k) = e[2].get<double>();
            }
        }
        RealVector apr = RealVector::Constant(n, kPi);
        if (j.contains("apr")) {
            const auto& arr = j.at("apr");
            if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
                throw ValidationError("graph JSON: apr must be a length-n array");
            }
            for (int i = 0; i < n; ++i) apr(i) = arr[static_cast<size_t>(i)].get<double>();
        }
        return GraphInput{TransitionMatrix(std::move(g)),
                          PhaseConfig(std::move(apr), std::move(link))};
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("graph JSON: ") + e.what());
    }
}

GraphInput load_graph_json(const std::string& path) {
    return graph_from_json(parse_file(path));
}

CoinInput coins_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 1) {
            throw ValidationError("coin JSON: n must be positive");
        }
        IntMatrix a = IntMatrix::Zero(n, n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ValidationError("coin JSON: edges must be [i, j] pairs");
            }
            const int i = e[0].get<int>();
            const int k = e[1].get<int>();
            if (i < 0 || i >= n || k < 0 || k >= n) {
                throw InvalidNode("coin JSON: edge endpoint outside [0, n)");
            }
            a(i, k) = 1;
            a(k, i) = 1;
        }
        AdjacencyMatrix adjacency = AdjacencyMatrix::from_matrix(std::move(a));

        const auto& coin_list = j.at("coins");
        if (!coin_list.is_array() || static_cast<int>(coin_list.size()) != n) {
            throw ValidationError("coin JSON: need one coin per node");
        }
        CoinSet coins;
        for (int i = 0; i < n; ++i) {
            const auto& rows = coin_list[static_cast<size_t>(i)];
            const int d = adjacency.degree(i);
            if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
                throw DimensionMismatch("coin JSON: coin " + std::to_string(i) +
                                        " must be " + std::to_string(d) + "x" +
                                        std::to_string(d));
            }
            ComplexMatrix c(d, d);
            for (int r = 0; r < d; ++r) {
                const auto& row = rows[static_cast<size_t>(r)];
                if (!row.is_array() || static_cast<int>(row.size()) != d) {
                    throw DimensionMismatch("coin JSON: coin " + std::to_string(i) +
                                            " row " + std::to_string(r) + " has wrong length");
                }
                for (int col = 0; col < d; ++col) {
                    const auto& entry = row[static_cast<size_t>(col)];
                    if (!entry.is_array() || entry.size() != 2) {
                        throw ValidationError("coin JSON: entries must be [re, im] pairs");
                    }
                    c(r, col) = Complex(entry[0].get<double>(), entry[1].get<double>());
                }
            }
            coins.coins.push_back(std::move(c));
            coins.neighbor_order.push_back(adjacency.neighbors(i));
        }
        coins.validate(adjacency);
        return CoinInput{std::move(coins), std::move(adjacency)};
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("coin JSON: ") + e.what());
    }
}

CoinInput load_coins_json(const std::string& path) {
    return coins_from_json(parse_file(path));
}

void save_state_json(const WalkState& state, const std::string& path) {
    nlohmann::ordered_json j;
    const int n = state.n_nodes();
    j["n"] = n;
    auto& amps = j["amplitudes"] = nlohmann::json::array();
    for (int first = 0; first < n; ++first) {
        for (int second = 0; second < n; ++second) {
            const Complex a = state.amplitude(first, second);
            if (a != Complex(0.0, 0.0)) {
                amps.push_back({first, second, a.real(), a.imag()});
            }
        }
    }
    write_text_atomic(path, j.dump(2) + "\n");
}

WalkState load_state_json(const std::string& path) {
    const nlohmann::json j = parse_file(path);
    try {
        const int n = j.at("n").get<int>();
        if (n < 1) {
            throw ValidationError("state JSON: n must be positive");
        }
        ComplexMatrix phi = ComplexMatrix::Zero(n, n);
        for (const auto& e : j.at("amplitudes")) {
            if (!e.is_array() || e.size() != 4) {
                throw ValidationError("state JSON: amplitudes must be [first, second, re, im]");
            }
            const int first = e[0].get<int>();
            const int second = e[1].get<int>();
            if (first < 0 || first >= n || second < 0 || second >= n) {
                throw InvalidNode("state JSON: index outside [0, n)");
            }
            phi(second, first) = Complex(e[2].get<double>(), e[3].get<double>());
        }
        try {
            return WalkState::from_matrix(std::move(phi));
        } catch (const UnnormalizedState& e) {
            throw ValidationError(std::string("state JSON: ") + e.what());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("state JSON: ") + e.what());
    }
}

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write '" + tmp.string() + "'");
        }
        out << content;
        if (!out.flush()) {
            throw Error("write failed for '" + tmp.string() + "'");
        }
    }
    fs::rename(tmp, target);
}

std::string distribution_csv(const RunRecord& rec) {
    std::ostringstream out;
    out << "step,node,probability\n";
    for (size_t step = 0; step < rec.distributions.size(); ++step) {
        const RealVector& dist = rec.distributions[step];
        if (static_cast<size_t>(dist.size()) != rec.node_labels.size()) {
            throw DimensionMismatch("distribution_csv: label/distribution size mismatch");
        }
        const double total = dist.sum();
        if (std::fabs(total - 1.0) > kDistributionTol) {
            throw NumericalError("distribution at step " + std::to_string(step) +
                                 " sums to " + format_double(total));
        }
        for (Eigen::Index p = 0; p < dist.size(); ++p) {
            out << step << ',' << rec.node_labels[static_cast<size_t>(p)] << ','
                << format_double(dist(p)) << '\n';
        }
    }
    return out.str();
}

std::string scaling_csv(const RunRecord& rec) {
    std::ostringstream out;
    out << "size,seconds\n";
    for (const auto& [size, sec] : rec.scaling_times) {
        out << size << ',' << format_double(sec) << '\n';
    }
    return out.str();
}

nlohmann::ordered_json run_to_json(const RunRecord& rec, bool include_distributions) {
    nlohmann::ordered_json j;
    j["metadata"] = rec.metadata;
    if (include_distributions && !rec.distributions.empty()) {
        j["node_labels"] = rec.node_labels;
        auto& dists = j["distributions"] = nlohmann::json::array();
        for (size_t step = 0; step < rec.distributions.size(); ++step) {
            const RealVector& dist = rec.distributions[step];
            const double total = dist.sum();
            if (std::fabs(total - 1.0) > kDistributionTol) {
                throw NumericalError("distribution at step " + std::to_string(step) +
                                     " sums to " + format_double(total));
            }
            dists.push_back(std::vector<double>(dist.data(), dist.data() + dist.size()));
        }
    }
    if (!rec.scaling_times.empty()) {
        auto& sc = j["scaling"] = nlohmann::json::array();
        for (const auto& [size, sec] : rec.scaling_times) {
            sc.push_back({size, sec});
        }
    }
    if (!rec.step_seconds.empty()) {
        j["timing"]["step_seconds"] = rec.step_seconds;
    }
    return j;
}

void write_run(const RunRecord& rec, const std::string& out_path, const std::string& format) {
    if (format == "csv") {
        const std::string table =
            rec.scaling_times.empty() ? distribution_csv(rec) : scaling_csv(rec);
        write_text_atomic(out_path, table);
        write_text_atomic(out_path + ".meta.json",
                          run_to_json(rec, /*include_distributions=*/false).dump(2) + "\n");
    } else if (format == "json") {
        write_text_atomic(out_path, run_to_json(rec, /*include_distributions=*/true).dump(2) + "\n");
    } else {
        throw ValidationError("format must be 'csv' or 'json'");
    }
}

}  // namespace szsim
