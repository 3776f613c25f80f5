#include <boxlb/harness.hpp>
#include <boxlb/metrics.hpp>
#include <boxlb/weights.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace boxlb {

void ExperimentConfig::validate () const
{
    if (node_counts.empty() || boxes_per_rank.empty() || std_devs.empty() || algorithms.empty()) {
        throw std::invalid_argument("node counts, boxes per rank, std devs and algorithms must be nonempty");
    }
    if (trials < 1) { throw std::invalid_argument("trials must be at least 1"); }
    if (ranks_per_node < 1) { throw std::invalid_argument("ranks per node must be at least 1"); }
    if (!(mean > 0.0)) { throw std::invalid_argument("mean weight must be positive"); }
    for (int n : node_counts) {
        if (n < 1) { throw std::invalid_argument("node counts must be positive"); }
    }
    for (int b : boxes_per_rank) {
        if (b < 1) { throw std::invalid_argument("boxes per rank must be positive"); }
    }
    for (double s : std_devs) {
        if (!(s >= 0.0)) { throw std::invalid_argument("std devs must be non-negative"); }
    }
    for (int d = 0; d < 3; ++d) {
        if (domain_extent[d] < 1) { throw std::invalid_argument("domain extent must be positive"); }
    }
    if (threads < 0) { throw std::invalid_argument("thread count must be non-negative"); }
}

ExperimentConfig ExperimentConfig::full_sweep ()
{
    ExperimentConfig c;
    c.node_counts.clear();
    for (int n = 1; n <= 512; n *= 2) { c.node_counts.push_back(n); }
    c.ranks_per_node = 4;
    c.boxes_per_rank = {4, 8, 16};
    c.std_devs = {small_std_dev, medium_std_dev, large_std_dev};
    c.trials = 250;
    return c;
}

namespace {

std::uint64_t splitmix64 (std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct TopologyPoint
{
    int node_count;
    int boxes_per_rank;
    std::vector<std::size_t> order;
    double ordering_time_s;
};

bool uses_sfc (Algorithm a)
{
    return a != Algorithm::knapsack;
}

double seconds_since (std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}

std::uint64_t trial_seed (std::uint64_t base_seed, int node_count, int boxes_per_rank,
                          int std_dev_index, int trial)
{
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ std::uint64_t(node_count));
    h = splitmix64(h ^ std::uint64_t(boxes_per_rank));
    h = splitmix64(h ^ std::uint64_t(std_dev_index));
    h = splitmix64(h ^ std::uint64_t(trial));
    return h;
}

ExperimentResult run_experiment (const ExperimentConfig& config)
{
    config.validate();
    ExperimentResult out;

    std::vector<TopologyPoint> points;
    for (int nodes : config.node_counts) {
        for (int bpr : config.boxes_per_rank) {
            const long long nboxes = 1LL * nodes * config.ranks_per_node * bpr;
            try {
                if (nboxes > std::numeric_limits<int>::max()) {
                    throw std::invalid_argument("box count overflows");
                }
                const BoxArray ba = make_box_array(config.domain_extent, static_cast<int>(nboxes));
                const auto t0 = std::chrono::steady_clock::now();
                auto order = sfc_order(ba);
                points.push_back({nodes, bpr, std::move(order), seconds_since(t0)});
            } catch (const std::exception& e) {
                out.warnings.push_back("skipped nodes=" + std::to_string(nodes) + " boxes_per_rank="
                                       + std::to_string(bpr) + ": " + e.what());
            }
        }
    }

    const std::size_t nstd = config.std_devs.size();
    const std::size_t ntrials = static_cast<std::size_t>(config.trials);
    const std::size_t nalg = config.algorithms.size();
    const std::size_t per_alg = points.size() * nstd * ntrials;
    out.records.resize(per_alg * nalg);

    // A unit is one (topology, std dev, trial); records land in fixed slots.
    auto run_unit = [&] (std::size_t unit) {
        const std::size_t trial = unit % ntrials;
        const std::size_t si = (unit / ntrials) % nstd;
        const TopologyPoint& pt = points[unit / (ntrials * nstd)];

        const Topology topo{pt.node_count, config.ranks_per_node};
        const std::uint64_t seed = trial_seed(config.base_seed, pt.node_count, pt.boxes_per_rank,
                                              static_cast<int>(si), static_cast<int>(trial));
        const WeightVector w = generate_weights({config.mean, config.std_devs[si], seed}, pt.order.size());
        const std::uint64_t whash = hash_weights(w);

        PartitionProblem problem;
        problem.weights = w;
        problem.rank_count = topo.rank_count();
        problem.sfc_order = pt.order;

        for (std::size_t ai = 0; ai < nalg; ++ai) {
            const Algorithm algo = config.algorithms[ai];
            const auto t0 = std::chrono::steady_clock::now();
            const DistributionMap dm = run_algorithm(algo, problem, topo);
            const double elapsed = seconds_since(t0);
            const LoadProfile prof = compute_loads(dm, w, problem.rank_count);

            TrialRecord& r = out.records[ai * per_alg + unit];
            r.algorithm = std::string(to_string(algo));
            r.node_count = pt.node_count;
            r.ranks_per_node = config.ranks_per_node;
            r.boxes_per_rank = pt.boxes_per_rank;
            r.std_dev = config.std_devs[si];
            r.trial = static_cast<int>(trial);
            r.seed = seed;
            r.total_weight = prof.total_weight;
            r.max_load = prof.max_load;
            r.efficiency = efficiency(prof);
            r.partition_time_s = elapsed;
            r.ordering_time_s = uses_sfc(algo) ? pt.ordering_time_s : 0.0;
            r.weights_hash = whash;
        }
    };

    unsigned nworkers = 1;
    if (!config.serial) {
        nworkers = config.threads > 0 ? unsigned(config.threads) : std::max(1U, std::thread::hardware_concurrency());
    }
    nworkers = static_cast<unsigned>(std::min<std::size_t>(nworkers, std::max<std::size_t>(per_alg, 1)));

    if (nworkers <= 1) {
        for (std::size_t u = 0; u < per_alg; ++u) { run_unit(u); }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < nworkers; ++t) {
                pool.emplace_back([&] {
                    for (std::size_t u = next++; u < per_alg; u = next++) {
                        try {
                            run_unit(u);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) { failure = std::current_exception(); }
                            next = per_alg;
                        }
                    }
                });
            }
        }
        if (failure) { std::rethrow_exception(failure); }
    }
    return out;
}

std::vector<SummaryRecord> summarize (const std::vector<TrialRecord>& records)
{
    using Key = std::tuple<std::string, int, int, int, double>;
    std::map<Key, std::size_t> slot;
    std::vector<std::vector<const TrialRecord*>> groups;
    for (const auto& r : records) {
        const Key k{r.algorithm, r.node_count, r.ranks_per_node, r.boxes_per_rank, r.std_dev};
        auto [it, inserted] = slot.try_emplace(k, groups.size());
        if (inserted) { groups.emplace_back(); }
        groups[it->second].push_back(&r);
    }

    auto mean_std = [] (const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) { m += x; }
        m /= double(v.size());
        if (v.size() < 2) { return std::pair{m, 0.0}; }
        double ss = 0.0;
        for (double x : v) { ss += (x - m) * (x - m); }
        return std::pair{m, std::sqrt(ss / double(v.size() - 1))};
    };

    std::vector<SummaryRecord> out;
    out.reserve(groups.size());
    for (const auto& g : groups) {
        std::vector<double> eff, t;
        for (const auto* r : g) {
            eff.push_back(r->efficiency);
            t.push_back(r->partition_time_s);
        }
        SummaryRecord s;
        s.algorithm = g.front()->algorithm;
        s.node_count = g.front()->node_count;
        s.ranks_per_node = g.front()->ranks_per_node;
        s.boxes_per_rank = g.front()->boxes_per_rank;
        s.std_dev = g.front()->std_dev;
        s.trials = static_cast<int>(g.size());
        std::tie(s.mean_efficiency, s.std_efficiency) = mean_std(eff);
        std::tie(s.mean_partition_time_s, s.std_partition_time_s) = mean_std(t);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

// Shortest representation that parses back to the same double.
std::string fmt_double (double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

template <class T>
T parse_field (std::string_view s, std::string_view name)
{
    T v{};
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::runtime_error("bad value '" + std::string(s) + "' in column " + std::string(name));
    }
    return v;
}

void write_file (const std::filesystem::path& file, const std::string& text)
{
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) { throw std::runtime_error("cannot open " + file.string() + " for writing"); }
    os << text;
    os.flush();
    if (!os) { throw std::runtime_error("failed writing " + file.string()); }
}

}

std::string to_csv_row (const TrialRecord& r)
{
    std::string s;
    s += r.algorithm;
    s += ',' + std::to_string(r.node_count);
    s += ',' + std::to_string(r.ranks_per_node);
    s += ',' + std::to_string(r.boxes_per_rank);
    s += ',' + fmt_double(r.std_dev);
    s += ',' + std::to_string(r.trial);
    s += ',' + std::to_string(r.seed);
    s += ',' + std::to_string(r.total_weight);
    s += ',' + std::to_string(r.max_load);
    s += ',' + fmt_double(r.efficiency);
    s += ',' + fmt_double(r.partition_time_s);
    s += ',' + fmt_double(r.ordering_time_s);
    return s;
}

std::string to_csv_row (const SummaryRecord& r)
{
    std::string s;
    s += r.algorithm;
    s += ',' + std::to_string(r.node_count);
    s += ',' + std::to_string(r.ranks_per_node);
    s += ',' + std::to_string(r.boxes_per_rank);
    s += ',' + fmt_double(r.std_dev);
    s += ',' + std::to_string(r.trials);
    s += ',' + fmt_double(r.mean_efficiency);
    s += ',' + fmt_double(r.std_efficiency);
    s += ',' + fmt_double(r.mean_partition_time_s);
    s += ',' + fmt_double(r.std_partition_time_s);
    return s;
}

TrialRecord parse_trial_row (std::string_view line)
{
    if (!line.empty() && line.back() == '\r') { line.remove_suffix(1); }
    std::vector<std::string_view> f;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        f.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) { break; }
        start = comma + 1;
    }
    if (f.size() != 12) {
        throw std::runtime_error("trials.csv row has " + std::to_string(f.size()) + " fields, expected 12");
    }
    TrialRecord r;
    r.algorithm = std::string(f[0]);
    r.node_count = parse_field<int>(f[1], "node_count");
    r.ranks_per_node = parse_field<int>(f[2], "ranks_per_node");
    r.boxes_per_rank = parse_field<int>(f[3], "boxes_per_rank");
    r.std_dev = parse_field<double>(f[4], "std_dev");
    r.trial = parse_field<int>(f[5], "trial");
    r.seed = parse_field<std::uint64_t>(f[6], "seed");
    r.total_weight = parse_field<Weight>(f[7], "total_weight");
    r.max_load = parse_field<Weight>(f[8], "max_load");
    r.efficiency = parse_field<double>(f[9], "efficiency");
    r.partition_time_s = parse_field<double>(f[10], "partition_time_s");
    r.ordering_time_s = parse_field<double>(f[11], "ordering_time_s");
    return r;
}

void write_results (const std::vector<TrialRecord>& records,
                    const std::vector<SummaryRecord>& summaries,
                    const ExperimentConfig& config,
                    const std::filesystem::path& dir,
                    const std::vector<std::string>& warnings)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) { throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message()); }

    std::string trials(trials_csv_header);
    trials += '\n';
    for (const auto& r : records) { trials += to_csv_row(r) + '\n'; }
    write_file(dir / "trials.csv", trials);

    std::string summary(summary_csv_header);
    summary += '\n';
    for (const auto& s : summaries) { summary += to_csv_row(s) + '\n'; }
    write_file(dir / "summary.csv", summary);

    nlohmann::ordered_json j;
    j["artifact_version"] = artifact_version;
    j["weight_generator"] = weight_generator_id;
    j["seed_mix"] = "splitmix64(base_seed, node_count, boxes_per_rank, std_dev_index, trial)";
    j["base_seed"] = config.base_seed;
    j["node_counts"] = config.node_counts;
    j["ranks_per_node"] = config.ranks_per_node;
    j["boxes_per_rank"] = config.boxes_per_rank;
    j["mean"] = config.mean;
    j["std_devs"] = config.std_devs;
    j["trials"] = config.trials;
    std::vector<std::string> algos;
    for (Algorithm a : config.algorithms) { algos.emplace_back(to_string(a)); }
    j["algorithms"] = algos;
    j["domain_extent"] = config.domain_extent;
    j["serial"] = config.serial;
    j["threads"] = config.threads;
    j["skipped"] = warnings;
    write_file(dir / "config.json", j.dump(2) + '\n');
}

std::vector<TrialRecord> read_trials_csv (const std::filesystem::path& file)
{
    std::ifstream is(file, std::ios::binary);
    if (!is) { throw std::runtime_error("cannot open " + file.string()); }
    std::string line;
    if (!std::getline(is, line) || line.rfind(trials_csv_header, 0) != 0) {
        throw std::runtime_error(file.string() + " does not start with the trials.csv header");
    }
    std::vector<TrialRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) { continue; }
        out.push_back(parse_trial_row(line));
    }
    return out;
}

}
