#pragma once

// Closed-loop agent plumbing shared by MGP and the baselines: configuration,
// the per-run trace, and the execute/observe step.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgp/budget.hpp"
#include "mgp/goal_dynamics.hpp"
#include "mgp/heuristics.hpp"
#include "mgp/search_tree.hpp"
#include "mgp/strips.hpp"
#include "mgp/wastar.hpp"

namespace mgp {

struct MgpConfig {
  double weight = 1.0;
  double delay_coefficient = 1.2;
  bool open_check = false;
  bool plan_follow = false;
  HeuristicKind heuristic = HeuristicKind::ff;
  Budgets budgets;
};

enum class RunStatus { success, failure, budget };

std::string_view to_string(RunStatus status);

/// A broken internal invariant (e.g. an extracted plan that does not apply).
/// Never reported as a run outcome.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EpisodeRecord {
  std::uint32_t iteration = 0;
  std::uint64_t t_begin = 0;
  std::uint64_t t_end = 0;
  std::size_t tree_size_before = 0;
  SearchOutcome outcome;
};

/// Heuristic work spent adapting the tree to a new goal.
struct TreeUpdateRecord {
  std::size_t stored_nodes = 0;
  std::uint64_t heuristic_calls = 0;
};

enum class DelayKind { open_check, plan_follow, must_search };

struct TraceEvent {
  enum class Kind { search, exec, goal_change, delay, reroot, update } kind;
  std::uint64_t t = 0;
  std::uint64_t ref = 0;    // index into the matching trace vector
  std::uint64_t value = 0;  // kind-specific payload
};

struct AgentTrace {
  std::string algorithm;
  RunStatus status = RunStatus::failure;
  std::string detail;

  std::vector<ActionId> executed;
  std::vector<std::uint64_t> executed_t;
  std::vector<EpisodeRecord> episodes;
  std::vector<TreeUpdateRecord> updates;
  std::vector<GoalChange> goal_log;  // every due mutation, in order
  std::uint64_t goal_changes = 0;    // checkpoints where the goal actually moved
  std::optional<Goal> installed_goal;
  std::vector<TraceEvent> events;

  State final_state;
  Goal final_goal;
  std::uint64_t expansions = 0;
  std::uint64_t heuristic_calls = 0;
  std::uint64_t final_t = 0;
  double cpu_seconds = 0.0;
};

/// Line-oriented event log (EXEC, GOAL-CHANGE, SEARCH-BEGIN/END, ...).
void write_trace(std::ostream& out, const AgentTrace& trace, const GroundProblem& problem);

/// Replays executed actions from s0 and the goal log from the installed goal.
/// Checks that both trajectories are well defined, that they end in the
/// recorded final state/goal, and for successful runs that the final state
/// satisfies the final goal.
bool replay_trace(const GroundProblem& problem, const AgentTrace& trace, std::string* why = nullptr);

/// Mutable state of one closed-loop run.
class AgentRun {
 public:
  AgentRun(const GroundProblem& problem, const MgpConfig& config, GoalEnvironment& env,
           std::string algorithm);

  const GroundProblem& problem;
  const MgpConfig& config;
  GoalEnvironment& env;
  HeuristicEvaluator h;
  Budget budget;
  SearchTree tree;
  AgentTrace trace;
  State s;
  Goal g;

  std::span<const GroundAction> actions() const { return problem.actions; }

  /// Seeds the tree with the current state as single OPEN root.
  void seed_tree(std::uint32_t iteration);
  SearchOutcome run_search(std::uint32_t iteration);
  /// Installs the evolving goal after the first successful search.
  void install_goal(NodeId goal_node);

  /// Executes the first action of `plan`, drops it, then observes the goal.
  /// Returns true if the goal moved.
  bool execute_step(Plan& plan);
  /// UpdateGoal checkpoint without acting. Returns true if the goal moved.
  bool observe_goal();

  void record_delay(DelayKind kind);
  void reroot();
  void record_update(std::size_t stored, std::uint64_t calls);

  AgentTrace finish(RunStatus status, std::string detail = {});
};

}  // namespace mgp
