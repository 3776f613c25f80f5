#pragma once

#include <boxlb/balancers.hpp>
#include <boxlb/geometry.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace boxlb {

inline constexpr std::string_view artifact_version = "1.0.0";

struct ExperimentConfig
{
    std::vector<int> node_counts{1};
    int ranks_per_node = 4;
    std::vector<int> boxes_per_rank{4};
    double mean = default_mean;
    std::vector<double> std_devs{small_std_dev};
    int trials = 1;
    std::uint64_t base_seed = 0;
    std::vector<Algorithm> algorithms{std::begin(all_algorithms), std::end(all_algorithms)};
    IntVect domain_extent{256, 256, 256};
    std::filesystem::path output_path;
    // Run every trial on the calling thread, one after another.
    bool serial = false;
    // Worker count when not serial; 0 picks std::thread::hardware_concurrency.
    int threads = 0;

    //! Throws std::invalid_argument describing the first problem found.
    void validate () const;

    //! Nodes 1..512 by powers of two, 4 ranks per node, 4/8/16 boxes per
    //! rank, the three std-dev presets, 250 trials, all five algorithms.
    static ExperimentConfig full_sweep ();
};

struct TrialRecord
{
    std::string algorithm;
    int node_count = 0;
    int ranks_per_node = 0;
    int boxes_per_rank = 0;
    double std_dev = 0.0;
    int trial = 0;
    std::uint64_t seed = 0;
    Weight total_weight = 0;
    Weight max_load = 0;
    double efficiency = 0.0;
    double partition_time_s = 0.0;
    double ordering_time_s = 0.0;
    // Hash of the weight vector fed to the algorithm. Not serialized.
    std::uint64_t weights_hash = 0;
};

struct SummaryRecord
{
    std::string algorithm;
    int node_count = 0;
    int ranks_per_node = 0;
    int boxes_per_rank = 0;
    double std_dev = 0.0;
    int trials = 0;
    double mean_efficiency = 0.0;
    double std_efficiency = 0.0;
    double mean_partition_time_s = 0.0;
    double std_partition_time_s = 0.0;
};

struct ExperimentResult
{
    std::vector<TrialRecord> records;
    // One line per skipped topology point.
    std::vector<std::string> warnings;
};

//! Per-trial seed: splitmix64 folded over base_seed, node_count,
//! boxes_per_rank, std-dev index and trial index, in that order.
std::uint64_t trial_seed (std::uint64_t base_seed, int node_count, int boxes_per_rank,
                          int std_dev_index, int trial);

/**
 * Run every (topology, distribution, trial) point through every configured
 * algorithm. One BoxArray and SFC order is built per topology; one weight
 * vector per trial is shared by all algorithms. Records come back ordered by
 * (algorithm, node count, boxes per rank, std dev, trial) regardless of how
 * trials were scheduled.
 */
ExperimentResult run_experiment (const ExperimentConfig& config);

//! Mean and sample standard deviation per (algorithm, node count, ranks per
//! node, boxes per rank, std dev) group, in first-seen order.
std::vector<SummaryRecord> summarize (const std::vector<TrialRecord>& records);

inline constexpr std::string_view trials_csv_header =
    "algorithm,node_count,ranks_per_node,boxes_per_rank,std_dev,trial,seed,"
    "total_weight,max_load,efficiency,partition_time_s,ordering_time_s";

inline constexpr std::string_view summary_csv_header =
    "algorithm,node_count,ranks_per_node,boxes_per_rank,std_dev,trials,"
    "mean_efficiency,std_efficiency,mean_partition_time_s,std_partition_time_s";

std::string to_csv_row (const TrialRecord& r);
std::string to_csv_row (const SummaryRecord& s);
TrialRecord parse_trial_row (std::string_view line);

//! Write trials.csv, summary.csv and config.json into `dir`, creating it if
//! needed. Skipped-topology warnings go into config.json. I/O failures throw
//! std::runtime_error naming the path.
void write_results (const std::vector<TrialRecord>& records,
                    const std::vector<SummaryRecord>& summaries,
                    const ExperimentConfig& config,
                    const std::filesystem::path& dir,
                    const std::vector<std::string>& warnings = {});

std::vector<TrialRecord> read_trials_csv (const std::filesystem::path& file);

}
