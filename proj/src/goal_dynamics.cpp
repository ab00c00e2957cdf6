#include "mgp/goal_dynamics.hpp"

#include <stdexcept>

namespace mgp {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // reject the top partial block so every residue is equally likely
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

std::uint64_t steps_due(const CostCounter& counter, std::uint32_t goal_rate) {
  if (goal_rate == 0) throw std::invalid_argument("goal rate must be >= 1");
  return (counter.t - counter.t_p) / goal_rate;
}

Goal evolve(const Goal& goal, std::uint64_t steps, std::span<const GroundAction> actions, Rng& rng,
            std::vector<ActionId>* applied) {
  if (!goal.complete()) throw std::invalid_argument("evolve requires a complete goal state");
  State cur = goal.mask();
  std::vector<ActionId> options;
  for (std::uint64_t k = 0; k < steps; ++k) {
    options.clear();
    for (ActionId a = 0; a < actions.size(); ++a) {
      if (applicable(cur, actions[a])) options.push_back(a);
    }
    if (options.empty()) {
      if (applied != nullptr) applied->push_back(kNoAction);
      continue;
    }
    const ActionId pick = options[rng.below(options.size())];
    cur = apply(cur, actions[pick]);
    if (applied != nullptr) applied->push_back(pick);
  }
  return Goal::complete_state(cur);
}

GoalEnvironment::GoalEnvironment(const GoalDynamicsConfig& config,
                                 std::span<const GroundAction> actions)
    : config_(config), actions_(actions), rng_(config.seed) {
  if (config.goal_rate == 0) throw std::invalid_argument("goal rate must be >= 1");
}

Goal GoalEnvironment::install_initial_goal(const State& solution_state) {
  installed_goal_ = Goal::complete_state(solution_state);
  return *installed_goal_;
}

std::optional<Goal> GoalEnvironment::update_goal(const Goal& current) {
  if (!config_.enabled || !installed()) return std::nullopt;
  const std::uint64_t n = steps_due(counter_, config_.goal_rate);
  if (n == 0) return std::nullopt;
  counter_.t_p += n * config_.goal_rate;
  GoalChange change;
  change.t = counter_.t;
  change.steps = n;
  Goal next = evolve(current, n, actions_, rng_, &change.actions);
  changes_.push_back(std::move(change));
  return next;
}

}  // namespace mgp
