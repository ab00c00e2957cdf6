#pragma once

// MGP: interleaves weighted A* episodes with plan execution and delays new
// searches through Open Check and Plan Follow.

#include <optional>

#include "mgp/agent.hpp"

namespace mgp {

/// h(s,g) * c > h(s,p) + h(p,g). Any infinite operand means "search now".
bool plan_follow_holds(HValue h_s_g, HValue h_s_p, HValue h_p_g, double delay_coefficient);

struct DelayDecision {
  DelayKind kind = DelayKind::must_search;
  NodeId node = kNoNode;  // plan target for open_check / plan_follow
};

/// Memoizes h(p, g): goals persist across steps, so the pair is often
/// evaluated repeatedly.
class GoalPairMemo {
 public:
  HValue get(const Goal& p, const Goal& g, HeuristicEvaluator& h);

 private:
  std::optional<Goal> p_;
  std::optional<Goal> g_;
  HValue value_ = 0;
};

/// CanDelayNewSearch. `target` is the node the current plan leads to (the one
/// extracted for goal p); plan following needs a non-empty remaining plan.
DelayDecision can_delay_new_search(const SearchTree& tree, const State& s, const Goal& g,
                                   const Goal& p, std::optional<NodeId> target,
                                   const MgpConfig& config, HeuristicEvaluator& h,
                                   GoalPairMemo& memo);

/// Runs MGP until the current goal is reached, search fails, or the budget
/// runs out.
AgentTrace run_mgp(const GroundProblem& problem, const MgpConfig& config, GoalEnvironment& env);

}  // namespace mgp
