#pragma once

// Moving-goal environment: a machine-independent work counter drives a random
// walk of the (complete) goal state through the agent's own action model.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mgp/strips.hpp"

namespace mgp {

/// Work counter t. Incremented once per state expansion and once per
/// heuristic evaluation; t_p marks the last goal update.
struct CostCounter {
  std::uint64_t t = 0;
  std::uint64_t t_p = 0;

  void tick(std::uint64_t n = 1) { t += n; }
};

struct GoalDynamicsConfig {
  std::uint32_t goal_rate = 1;  // g_r >= 1: counter units per mutation step
  std::uint64_t seed = 0;
  bool enabled = true;
};

/// Portable pseudo-random source. mt19937_64's output sequence is fixed by
/// the standard; bounded draws use rejection sampling instead of
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// floor((t - t_p) / g_r).
std::uint64_t steps_due(const CostCounter& counter, std::uint32_t goal_rate);

/// Applies `steps` uniformly drawn applicable actions to a complete goal.
/// A step with no applicable action leaves the goal unchanged and is logged
/// as kNoAction.
Goal evolve(const Goal& goal, std::uint64_t steps, std::span<const GroundAction> actions, Rng& rng,
            std::vector<ActionId>* applied = nullptr);

struct GoalChange {
  std::uint64_t t = 0;
  std::uint64_t steps = 0;
  std::vector<ActionId> actions;
};

/// One per run. Owns the counter, the RNG and the goal-change log.
class GoalEnvironment {
 public:
  GoalEnvironment(const GoalDynamicsConfig& config, std::span<const GroundAction> actions);

  CostCounter& counter() { return counter_; }
  const CostCounter& counter() const { return counter_; }
  const GoalDynamicsConfig& config() const { return config_; }

  bool installed() const { return installed_goal_.has_value(); }
  /// The solution state of the first successful search becomes the
  /// evolving goal.
  Goal install_initial_goal(const State& solution_state);
  const std::optional<Goal>& installed_goal() const { return installed_goal_; }

  /// UpdateGoal checkpoint. Returns the mutated goal when at least one step
  /// was due, nullopt otherwise. Carries the remainder: t_p += n * g_r.
  std::optional<Goal> update_goal(const Goal& current);

  const std::vector<GoalChange>& changes() const { return changes_; }

 private:
  GoalDynamicsConfig config_;
  std::span<const GroundAction> actions_;
  CostCounter counter_;
  Rng rng_;
  std::optional<Goal> installed_goal_;
  std::vector<GoalChange> changes_;
};

}  // namespace mgp
