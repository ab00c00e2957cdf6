#pragma once

// Delete-relaxation estimators H(s, g): FF relaxed plan, h_add, h_max, goal
// count and the blind heuristic.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mgp/goal_dynamics.hpp"
#include "mgp/strips.hpp"

namespace mgp {

enum class HeuristicKind { ff, add, max, goal_count, zero };

std::string_view to_string(HeuristicKind kind);
std::optional<HeuristicKind> parse_heuristic_kind(std::string_view name);

/// Heuristic values live in unit-cost space. kInfiniteH marks a relaxed dead
/// end and never takes part in arithmetic.
using HValue = std::int64_t;
inline constexpr HValue kInfiniteH = std::numeric_limits<HValue>::max();

inline bool is_infinite(HValue h) { return h == kInfiniteH; }

/// max and zero never overestimate under unit costs. goal_count is only
/// admissible in special cases and is reported as non-admissible.
bool is_admissible(HeuristicKind kind);

/// Reusable scratch space sized to one problem.
struct RelaxedGraphWorkspace {
  std::vector<HValue> prop_cost;
  std::vector<HValue> action_cost;
  std::vector<std::uint32_t> unsatisfied;  // remaining preconditions per action
  std::vector<char> marked;
  std::vector<char> selected;
  std::vector<PropId> frontier;
  std::vector<PropId> next_frontier;
  std::vector<std::vector<PropId>> goal_layers;

  void reset(std::size_t props, std::size_t actions);
};

/// Evaluator bound to one action set. Each evaluation ticks the injected
/// work counter. Not thread-safe: one instance per run.
class HeuristicEvaluator {
 public:
  HeuristicEvaluator(HeuristicKind kind, std::span<const GroundAction> actions,
                     std::size_t universe, CostCounter* counter = nullptr);

  HValue operator()(const State& s, const Goal& g);

  HeuristicKind kind() const { return kind_; }
  void set_counter(CostCounter* counter) { counter_ = counter; }
  std::uint64_t calls() const { return calls_; }

 private:
  HValue cost_based(const State& s, const Goal& g, bool use_max);
  HValue relaxed_plan(const State& s, const Goal& g);

  HeuristicKind kind_;
  std::span<const GroundAction> actions_;
  std::size_t universe_;
  CostCounter* counter_;
  std::uint64_t calls_ = 0;
  std::vector<std::vector<ActionId>> consumers_;  // prop -> actions with it in pre
  std::vector<std::vector<ActionId>> achievers_;  // prop -> actions adding it, ascending id
  std::vector<ActionId> no_pre_;
  RelaxedGraphWorkspace ws_;
};

/// One-shot evaluation with a private workspace and no counter.
HValue evaluate(HeuristicKind kind, const State& s, const Goal& g,
                std::span<const GroundAction> actions);

}  // namespace mgp
