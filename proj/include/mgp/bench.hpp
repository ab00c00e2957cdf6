#pragma once

// Experiment harness: repeated seeded runs per (problem, algorithm, w, c, g_r)
// cell, CSV persistence and per-cell aggregation.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgp/agent.hpp"

namespace mgp {

enum class Algorithm { sastar, gfra, mgp, mgp_oc, mgp_pf, mgp_ocpf };

std::string_view to_string(Algorithm alg);
std::optional<Algorithm> parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();

AgentTrace run_algorithm(Algorithm alg, const GroundProblem& problem, const MgpConfig& config,
                         GoalEnvironment& env);

struct ExperimentRecord {
  std::string domain;
  std::string problem;
  std::string algorithm;
  double w = 1.0;
  double c = 1.2;
  std::uint32_t g_r = 1;
  std::uint64_t run_id = 0;
  std::uint64_t seed = 0;
  std::string status;
  double cpu_time_ms = 0.0;
  std::uint64_t executed_actions = 0;
  std::uint64_t search_episodes = 0;
  std::uint64_t expansions = 0;
  std::uint64_t heuristic_calls = 0;
  std::uint64_t goal_changes = 0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

struct CellParams {
  Algorithm algorithm = Algorithm::mgp_ocpf;
  double weight = 1.0;
  double delay_coefficient = 1.2;
  std::uint32_t goal_rate = 1;
  HeuristicKind heuristic = HeuristicKind::ff;
  Budgets budgets;
  bool goal_evolution = true;
  /// The GFRA*-style baseline runs plain A* (w = 1) unless overridden.
  std::optional<double> gfra_weight;
};

struct CellOptions {
  std::size_t repetitions = 100;
  std::uint64_t seed_base = 1;
  std::optional<std::filesystem::path> trace_dir;
  /// Writes cpu_time_ms as 0 so that identical seeds give identical bytes.
  bool zero_timing = false;
  unsigned jobs = 1;
};

MgpConfig make_config(const CellParams& params);

/// Runs seeds seed_base .. seed_base + repetitions - 1. Run outcomes are
/// recorded as status; a replay mismatch throws InternalError.
std::vector<ExperimentRecord> run_cell(const GroundProblem& problem, const CellParams& params,
                                       const CellOptions& options);

/// Record for one finished run.
ExperimentRecord make_record(const GroundProblem& problem, const CellParams& params,
                             std::uint64_t run_id, std::uint64_t seed, const AgentTrace& trace,
                             bool zero_timing);

inline constexpr std::string_view kCsvHeader =
    "domain,problem,algorithm,w,c,g_r,run_id,seed,status,cpu_time_ms,executed_actions,"
    "search_episodes,expansions,heuristic_calls,goal_changes";

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
               bool header = true);
/// Throws std::runtime_error on a header or field mismatch.
std::vector<ExperimentRecord> read_csv(std::istream& in);

struct CellSummary {
  std::string domain;
  std::string problem;
  std::string algorithm;
  double w = 1.0;
  double c = 1.2;
  std::uint32_t g_r = 1;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  // over successful runs only; absent when nothing succeeded
  std::optional<double> mean_cpu_ms;
  std::optional<double> median_cpu_ms;
  std::optional<double> mean_executed_actions;
};

/// Groups by (domain, problem, algorithm, w, c, g_r), in first-seen order.
std::vector<CellSummary> aggregate(const std::vector<ExperimentRecord>& records);

/// Fixed-width table; absent values print as "-".
void write_summary(std::ostream& out, const std::vector<CellSummary>& cells);

std::string format_number(double v);

}  // namespace mgp
