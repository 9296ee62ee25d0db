#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rveaca/core.hpp"

namespace rveaca {

/// Invalid experiment configuration, detected before any run starts.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScaleSetting {
    std::size_t population = 0;
    std::size_t evaluations = 0;
};

/// Population size and evaluation budget per objective count for the
/// many-objective study (M = 5, 8, 10, 13, 15, 20).
std::map<std::size_t, ScaleSetting> default_scales();

/// floor(evaluations / N) - 1: one initial evaluation of N, then N per generation.
std::size_t generations_for(const ScaleSetting& scale);

struct ProblemEntry {
    std::string name;
    std::size_t objectives = 0;
    bool operator==(const ProblemEntry&) const = default;
};

/// Parses "MaF1:5,DTLZ2:3".
std::vector<ProblemEntry> parse_problem_list(const std::string& text);

std::vector<std::string> parse_name_list(const std::string& text);

struct ExperimentConfig {
    std::vector<std::string> algorithms{"rvea-ca", "rvea"};
    std::vector<ProblemEntry> problems;
    std::map<std::size_t, ScaleSetting> scales = default_scales();
    std::size_t runs = 31;
    std::uint64_t base_seed = 1;
    std::size_t lambda = 100;
    std::size_t workers = 1;
    std::string out_dir = "results";
    std::string reference_algorithm = "rvea-ca";

    double hv_reference = 1.5;
    std::size_t hv_samples = 1'000'000;
    std::uint64_t hv_seed = 20240607;
    std::size_t trace_hv_samples = 10'000;
    std::size_t front_points = 10'000;
    std::size_t trace_every = 10;
    bool save_network = false;
    bool write_outputs = true;

    /// Throws ConfigError describing the first problem found.
    void validate() const;
    const ScaleSetting& scale_for(std::size_t objectives) const;
};

/// Reads a JSON document; absent keys keep their defaults, unknown keys are errors.
ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& config);

struct TracePoint {
    std::size_t t = 0;
    double hv = 0.0;
    double igdp = 0.0;
    std::size_t nodes = 0;
    std::size_t components = 0;
    double threshold = 0.0;
    bool operator==(const TracePoint&) const = default;
};

struct RunRecord {
    std::string algorithm;
    std::string problem;
    std::size_t objectives = 0;
    std::uint64_t seed = 0;
    std::size_t population = 0;
    std::size_t generations = 0;
    std::vector<TracePoint> trace;
    std::vector<Vec> final_objectives;
    double hv = 0.0;
    std::string hv_method;
    double igdp = 0.0;
    std::size_t final_nodes = 0;
    std::size_t final_components = 0;
    double wall_seconds = 0.0;
    bool operator==(const RunRecord&) const = default;
};

std::string record_to_json(const RunRecord& record);
RunRecord record_from_json(const std::string& text);

/// Base file name shared by a run's record, trace and network files.
std::string run_stem(const RunRecord& record);

/// One run of `algorithm` on `problem`. `network_json`, when given, receives the
/// final network of an rvea-ca run.
RunRecord execute_run(const ExperimentConfig& config, const std::string& algorithm,
                      const ProblemEntry& problem, std::uint64_t seed, std::string* network_json = nullptr);

struct ExperimentResult {
    std::vector<RunRecord> records;  ///< ordered by (algorithm, problem, seed) as configured
    std::vector<std::string> failures;
};

/// Validates, runs every (algorithm, problem, seed) cell on a worker pool and, when
/// `write_outputs` is set, persists records, traces and summaries under out_dir.
ExperimentResult run_experiment(const ExperimentConfig& config);

enum class Direction { HigherBetter, LowerBetter };

struct RankSumResult {
    char sign = '=';  ///< '+' first sample better, '-' worse, '=' no significant difference
    double p = 1.0;
    bool exact = false;
};

/// Two-sided Wilcoxon rank-sum test with midranks for ties. Exact enumeration for
/// n1 + n2 <= 12, otherwise the tie-corrected normal approximation with continuity
/// correction.
RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, Direction direction,
                                double level = 0.05);

/// Median (mean of the middle pair for even sizes).
double median(std::span<const double> values);
/// Sample standard deviation; 0 for a single value.
double sample_std(std::span<const double> values);

struct SummaryCell {
    std::string problem;
    std::size_t objectives = 0;
    std::string algorithm;
    std::size_t runs = 0;
    double hv_median = 0.0;
    double hv_std = 0.0;
    double igdp_median = 0.0;
    double igdp_std = 0.0;
    char hv_mark = ' ';    ///< reference algorithm vs this one; blank for the reference itself
    char igdp_mark = ' ';
};

std::vector<SummaryCell> summarize(const std::vector<RunRecord>& records, const std::string& reference_algorithm);

/// One row per run, no timing columns.
std::string runs_csv(const std::vector<RunRecord>& records);
std::string summary_table_csv(const std::vector<SummaryCell>& cells);
std::string summary_table_text(const std::vector<SummaryCell>& cells);

}  // namespace rveaca
