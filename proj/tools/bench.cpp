// bench: drive the load-balancing study from the command line.
//
//   bench run          --nodes 1,2,4 --boxes-per-rank 4,8,16 --std-dev small --trials 250 --out DIR
//   bench full-sweep --out DIR
//   bench oracle       --boxes 12 --ranks 2 --threads 8

#include <boxlb/harness.hpp>
#include <boxlb/metrics.hpp>
#include <boxlb/oracle.hpp>
#include <boxlb/weights.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace boxlb;

namespace {

std::vector<double> resolve_std_devs (const std::vector<std::string>& names)
{
    std::vector<double> out;
    for (const auto& n : names) {
        auto v = parse_std_dev(n);
        if (!v) { throw CLI::ValidationError("--std-dev", "expected small|medium|large|<number>, got '" + n + "'"); }
        out.push_back(*v);
    }
    return out;
}

std::vector<Algorithm> resolve_algorithms (const std::vector<std::string>& names)
{
    std::vector<Algorithm> out;
    for (const auto& n : names) {
        auto a = parse_algorithm(n);
        if (!a) {
            throw CLI::ValidationError("--algorithms",
                "unknown algorithm '" + n + "' (knapsack, sfc, painters, combined-sfc, combined-painters)");
        }
        out.push_back(*a);
    }
    return out;
}

int run_and_write (const ExperimentConfig& cfg)
{
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentResult res = run_experiment(cfg);
    for (const auto& w : res.warnings) { std::cerr << "warning: " << w << '\n'; }
    const auto summaries = summarize(res.records);
    write_results(res.records, summaries, cfg, cfg.output_path, res.warnings);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "wrote " << res.records.size() << " trial records and " << summaries.size()
              << " summaries to " << cfg.output_path.string() << " in " << dt << " s\n";
    return 0;
}

}

int main (int argc, char** argv)
{
    CLI::App app{"Load-balancing study: knapsack, SFC, painter's partition and hybrids"};
    app.require_subcommand(1);

    // run
    ExperimentConfig run_cfg;
    std::vector<std::string> std_names{"small"};
    std::vector<std::string> algo_names{"knapsack", "sfc", "painters", "combined-sfc", "combined-painters"};
    std::string run_out;
    auto* run = app.add_subcommand("run", "Run a configurable sweep and write trials.csv/summary.csv/config.json");
    run->add_option("--nodes", run_cfg.node_counts, "Node counts")->delimiter(',')->required();
    run->add_option("--ranks-per-node", run_cfg.ranks_per_node, "Ranks per node")->capture_default_str();
    run->add_option("--boxes-per-rank", run_cfg.boxes_per_rank, "Boxes per rank")->delimiter(',')->capture_default_str();
    run->add_option("--std-dev", std_names, "small|medium|large|<number>, comma separated")->delimiter(',');
    run->add_option("--mean", run_cfg.mean, "Mean box weight")->capture_default_str();
    run->add_option("--trials", run_cfg.trials, "Trials per point")->capture_default_str();
    run->add_option("--seed", run_cfg.base_seed, "Base seed")->capture_default_str();
    run->add_option("--algorithms", algo_names, "Algorithms, comma separated")->delimiter(',');
    run->add_option("--domain", run_cfg.domain_extent, "Domain extent in cells (3 values)")->delimiter(',');
    run->add_option("--threads", run_cfg.threads, "Worker threads across trials (0 = all cores)");
    run->add_option("--out", run_out, "Output directory")->required();
    run->add_flag("--serial", run_cfg.serial, "Run trials one at a time for clean timings");

    // full-sweep
    std::string preset_out;
    bool preset_serial = false;
    int preset_threads = 0;
    auto* preset = app.add_subcommand("full-sweep", "Full sweep: nodes 1..512, 4 ranks/node, 4/8/16 boxes/rank, 3 std devs, 250 trials");
    preset->add_option("--out", preset_out, "Output directory")->required();
    preset->add_flag("--serial", preset_serial, "Run trials one at a time");
    preset->add_option("--threads", preset_threads, "Worker threads (0 = all cores)");

    // oracle
    int nboxes = 0;
    int nranks = 0;
    int nthreads = 1;
    bool no_symmetry = false;
    std::string oracle_std = "large";
    std::uint64_t oracle_seed = 0;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive brute-force solve of one random instance");
    oracle->add_option("--boxes", nboxes, "Number of boxes N")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--ranks", nranks, "Number of ranks P")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--threads", nthreads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    oracle->add_flag("--no-symmetry", no_symmetry, "Sweep all P^N assignments");
    oracle->add_option("--std-dev", oracle_std, "small|medium|large|<number>")->capture_default_str();
    oracle->add_option("--seed", oracle_seed, "Weight seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            run_cfg.std_devs = resolve_std_devs(std_names);
            run_cfg.algorithms = resolve_algorithms(algo_names);
            run_cfg.output_path = run_out;
            return run_and_write(run_cfg);
        }
        if (*preset) {
            ExperimentConfig cfg = ExperimentConfig::full_sweep();
            cfg.output_path = preset_out;
            cfg.serial = preset_serial;
            cfg.threads = preset_threads;
            return run_and_write(cfg);
        }
        if (*oracle) {
            const double sd = resolve_std_devs({oracle_std}).front();
            const WeightVector w = generate_weights({default_mean, sd, oracle_seed}, std::size_t(nboxes));
            BruteForceOptions opts;
            opts.threads = nthreads;
            opts.use_symmetry = !no_symmetry;
            const auto t0 = std::chrono::steady_clock::now();
            const BruteForceResult res = brute_force_solve(w, nranks, opts);
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            const double eff = efficiency(compute_loads(res.best_map, w, nranks));
            std::printf("best_max_load %lld\n", static_cast<long long>(res.best_max_load));
            std::printf("efficiency %.6f\n", eff);
            std::printf("combinations_checked %llu\n", static_cast<unsigned long long>(res.combinations_checked));
            std::printf("wall_time_s %.6f\n", dt);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
