#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "domset/bounds.hpp"
#include "domset/exact.hpp"
#include "domset/generate.hpp"
#include "domset/graph_io.hpp"
#include "domset/graph.hpp"
#include "domset/purify.hpp"

namespace domset {

struct BenchConfig {
    std::vector<Procedure> procedures{kAllProcedures.begin(), kAllProcedures.end()};
    PurifyOptions purify;
    /// Exact oracle runs on instances with n <= exact_max_n; 0 disables it.
    std::size_t exact_max_n = 0;
    ExactBudget exact_budget;
    /// Timings are left empty unless requested, so default output is reproducible.
    bool record_timings = false;
    /// 0 picks DOMSET_WORKERS from the environment, else hardware concurrency.
    std::size_t workers = 0;
};

struct ProcedureOutcome {
    std::size_t size = 0;
    std::optional<double> time_ms;
    std::size_t repair_additions = 0;
    bool quality_passed = true;
};

struct RunReport {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t greedy_size = 0;
    std::optional<double> stage1_ms;
    std::array<std::optional<ProcedureOutcome>, 5> procedures;
    std::optional<std::size_t> gamma;
    bool exact_timed_out = false;
    std::size_t lower = 0;
    /// Present for connected instances only.
    std::optional<std::size_t> upper;
    std::optional<std::uint64_t> seed;
    double alpha = 1.0;
    double beta = 1.0;

    std::optional<std::size_t> size_of(Procedure p) const;
    /// 100 * (PP0 - PPi) / PP0, when both ran and PP0 > 0.
    std::optional<double> pct_vs_pp0(Procedure p) const;
    /// 100 * (|S| - PPi) / |S|.
    std::optional<double> pct_vs_greedy(Procedure p) const;
    /// Minimum over PP1..PP4 of those that ran.
    std::optional<std::size_t> best_size() const;
};

struct AggregateStats {
    std::size_t instances = 0;
    /// Mean over instances of the best-of-PP1..PP4 reduction vs PP0 (percent).
    std::optional<double> mean_best_vs_pp0;
    /// Table-2 style per-procedure means, PP1..PP4.
    std::array<std::optional<double>, 4> mean_vs_pp0{};
    std::optional<double> mean_best_vs_greedy;
    std::size_t gamma_known = 0;
    std::size_t optimal_hits = 0;
    double optimal_hit_rate = 0.0;
    std::size_t non_optimal = 0;
    /// Mean of best - gamma over non-optimal gamma-known instances; 0 if none.
    double mean_error = 0.0;
    std::size_t with_upper = 0;
    std::optional<double> mean_ratio_to_upper;
};

/// Runs Stage 1 once and every configured procedure on its output. Throws
/// std::logic_error if any procedure returns a non-dominating set.
RunReport run_instance(const Graph& g, std::string instance, const BenchConfig& config);

AggregateStats summarize(const std::vector<RunReport>& reports);

struct FileGlob {
    std::string pattern;
    GraphFormat format = GraphFormat::kAuto;
};
struct GeneratedBatch {
    RandomGraphSpec spec;
    /// Instance i uses seed spec.seed + i.
    std::size_t count = 1;
};
using BatchSource = std::variant<FileGlob, GeneratedBatch>;

struct BatchFailure {
    std::string instance;
    std::string reason;
};

struct BatchResult {
    std::vector<RunReport> reports;
    std::vector<BatchFailure> failures;
    AggregateStats stats;
};

/// Reports are ordered by instance (sorted path, or generation index).
/// Throws std::runtime_error("no instances") when the source is empty and
/// when no instance succeeded.
BatchResult run_batch(const BatchSource& source, const BenchConfig& config);

/// Paths matching a shell pattern whose wildcards are in the file-name part.
std::vector<std::string> expand_glob(std::string_view pattern);

inline constexpr std::string_view kCsvHeader =
    "instance,n,m,S,PP0,PP1,PP2,PP3,PP4,pct0_1,pct0_2,pct0_3,pct0_4,gamma,lower,U,"
    "t_stage1_ms,t_pp1_ms,t_pp2_ms,t_pp3_ms,t_pp4_ms";

std::string to_csv(const std::vector<RunReport>& reports);
/// Reads back the CSV columns. Fields not in the CSV keep their defaults.
std::vector<RunReport> parse_csv(std::string_view text);

std::string report_to_json(const RunReport& report);
std::string stats_to_json(const AggregateStats& stats);
/// One report per line, then {"aggregate": {...}}.
std::string to_json_lines(const std::vector<RunReport>& reports, const AggregateStats& stats);

} // namespace domset
