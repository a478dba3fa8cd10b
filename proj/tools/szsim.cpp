// szsim command-line runner.
//
//   szsim run <scenario> [--n --steps --marked --mode --seed --out --format ...]
//   szsim cast --coins coins.json [--tol]
//
// Exit codes: 0 success, 2 validation error, 3 numerical-invariant violation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "szsim/coin.hpp"
#include "szsim/experiments.hpp"
#include "szsim/io.hpp"
#include "szsim/walk.hpp"

namespace {

struct RunOptions {
    std::string scenario;
    int n = 1000;
    int steps = 0;  // 0 = scenario default
    std::vector<int> marked;
    std::string mode = "apr";
    std::uint64_t seed = 12345;
    std::vector<int> sizes = {256, 512, 1024};
    std::string graph_file;
    std::string reg = "first";
    int renorm_every = 0;
    std::string initial_state_file;
    std::string dump_state_file;
    std::string out;
    std::string format = "csv";
};

struct CastOptions {
    std::string coins_file;
    double tol = szsim::kEigenClusterTol;
    std::string out;
};

void emit_lint(const szsim::TransitionMatrix& g, const szsim::PhaseConfig& phases) {
    for (const auto& w : szsim::lint_phases(g, phases)) {
        std::cerr << "warning: " << w << "\n";
    }
}

int do_run(const RunOptions& opt) {
    using namespace szsim;
    const Scenario scenario = scenario_from_string(opt.scenario);

    RunRecord rec;
    switch (scenario) {
        case Scenario::LineX:
        case Scenario::LineHadamard:
        case Scenario::LineNtilde:
        case Scenario::LineMixed:
            rec = run_line(scenario, opt.steps > 0 ? opt.steps : 100);
            break;
        case Scenario::SearchComplete: {
            std::vector<int> marked = opt.marked.empty() ? std::vector<int>{0} : opt.marked;
            int steps = opt.steps;
            if (steps <= 0) {
                steps = 2 * predicted_search_peak(opt.n,
                                                  static_cast<int>(marked.size())) + 4;
            }
            rec = run_search(opt.n, marked, steps, opt.mode);
            break;
        }
        case Scenario::ClassicalCheck: {
            if (opt.graph_file.empty()) {
                throw ValidationError("classical-check needs --graph");
            }
            const GraphInput gi = load_graph_json(opt.graph_file);
            RealVector p0 = RealVector::Zero(gi.g.n_nodes());
            p0(0) = 1.0;
            rec = run_classical_check(gi.g, p0, opt.steps > 0 ? opt.steps : 10);
            break;
        }
        case Scenario::ScalingBench:
            rec = run_scaling(opt.sizes, opt.seed);
            break;
        case Scenario::Custom: {
            if (opt.graph_file.empty()) {
                throw ValidationError("custom needs --graph");
            }
            const GraphInput gi = load_graph_json(opt.graph_file);
            emit_lint(gi.g, gi.phases);
            const WalkRegister reg =
                opt.reg == "second" ? WalkRegister::Second : WalkRegister::First;
            std::optional<WalkState> initial;
            if (!opt.initial_state_file.empty()) {
                initial = load_state_json(opt.initial_state_file);
            }
            WalkState final_state = WalkState::basis_state(gi.g.n_nodes(), 0, 0);
            rec = run_custom(gi.g, gi.phases, opt.steps > 0 ? opt.steps : 10, reg,
                             opt.renorm_every, initial ? &*initial : nullptr, &final_state);
            if (!opt.dump_state_file.empty()) {
                save_state_json(final_state, opt.dump_state_file);
            }
            break;
        }
    }

    const std::string out =
        opt.out.empty() ? "szsim-" + opt.scenario + "." + opt.format : opt.out;
    write_run(rec, out, opt.format);

    std::cout << "wrote " << out;
    if (opt.format == "csv") {
        std::cout << " (+ " << out << ".meta.json)";
    }
    std::cout << "\n";
    if (rec.metadata.contains("first_peak_step")) {
        std::cout << "first peak at step " << rec.metadata["first_peak_step"]
                  << " (predicted " << rec.metadata["predicted_peak_step"] << ")\n";
    }
    if (rec.metadata.contains("loglog_slope")) {
        std::cout << "log-log slope: " << rec.metadata["loglog_slope"].dump() << "\n";
    }
    return 0;
}

int do_cast(const CastOptions& opt) {
    using namespace szsim;
    const CoinInput input = load_coins_json(opt.coins_file);
    const CastResult result = cast_to_szegedy(input.coins, input.adjacency, opt.tol);

    nlohmann::ordered_json j;
    j["lemma_class"] = to_string(result.lemma_class);
    if (result.castable()) {
        const int n = result.g->n_nodes();
        j["n"] = n;
        auto& edges = j["edges"] = nlohmann::json::array();
        auto& link = j["link_phases"] = nlohmann::json::array();
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                // eigensolver dust below 1e-14 is not worth listing
                if (result.g->prob(k, i) > 1e-14) {
                    edges.push_back({i, k, result.g->prob(k, i)});
                }
                if (result.phases->link(i, k) != 0.0) {
                    link.push_back({i, k, result.phases->link(i, k)});
                }
            }
        }
        j["apr"] = std::vector<double>(result.phases->apr.data(),
                                       result.phases->apr.data() + n);
    } else {
        j["failed_node"] = result.failed_node;
        auto& ev = j["failed_eigenvalues"] = nlohmann::json::array();
        for (const auto& l : result.failed_eigenvalues) {
            ev.push_back({l.real(), l.imag()});
        }
    }

    if (opt.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_text_atomic(opt.out, j.dump(2) + "\n");
        std::cout << "wrote " << opt.out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("SZSIM_THREADS")) {
        const int k = std::atoi(threads);
        if (k > 0) Eigen::setNbThreads(k);
    }

    CLI::App app{"szsim: Szegedy quantum walk simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", szsim::kVersion);

    RunOptions run_opt;
    auto* run = app.add_subcommand("run", "run an experiment scenario");
    run->add_option("scenario", run_opt.scenario,
                    "line-x | line-hadamard | line-ntilde | line-mixed | search-complete | "
                    "classical-check | scaling-bench | custom")
        ->required();
    run->add_option("--n", run_opt.n, "node count (search-complete)");
    run->add_option("--steps", run_opt.steps, "step count (0 = scenario default)");
    run->add_option("--marked", run_opt.marked, "marked nodes (search-complete)")
        ->delimiter(',');
    run->add_option("--mode", run_opt.mode, "apr | absorb (search-complete)");
    run->add_option("--seed", run_opt.seed, "RNG seed (scaling-bench)");
    run->add_option("--sizes", run_opt.sizes, "sizes to time (scaling-bench)")
        ->delimiter(',');
    run->add_option("--graph", run_opt.graph_file, "graph JSON (custom, classical-check)");
    run->add_option("--register", run_opt.reg, "first | second (custom)");
    run->add_option("--renorm", run_opt.renorm_every,
                    "renormalize the state every K steps (custom; 0 = never)");
    run->add_option("--initial-state", run_opt.initial_state_file,
                    "state snapshot JSON to start from (custom)");
    run->add_option("--dump-state", run_opt.dump_state_file,
                    "write the final state snapshot here (custom)");
    run->add_option("--out", run_opt.out, "output path (default szsim-<scenario>.<format>)");
    run->add_option("--format", run_opt.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    CastOptions cast_opt;
    auto* cast = app.add_subcommand("cast", "classify a coin set and cast it to walk data");
    cast->add_option("--coins", cast_opt.coins_file, "coin-set JSON")->required();
    cast->add_option("--tol", cast_opt.tol, "eigenvalue clustering tolerance");
    cast->add_option("--out", cast_opt.out, "write the cast result here instead of stdout");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return do_run(run_opt);
        if (cast->parsed()) return do_cast(cast_opt);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const szsim::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const szsim::NumericalError& e) {
        std::cerr << "numerical invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
