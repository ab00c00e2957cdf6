#pragma once

// Comparison planners sharing the weighted A* engine with MGP.

#include "mgp/agent.hpp"

namespace mgp {

/// Successive A*: a fresh tree and a new search from the current state every
/// time the goal moves.
AgentTrace run_sastar(const GroundProblem& problem, const MgpConfig& config, GoalEnvironment& env);

/// GFRA*-style replanner: keeps the tree, checks CLOSED for the new goal, and
/// otherwise refreshes h of every stored node before resuming the search.
AgentTrace run_gfra(const GroundProblem& problem, const MgpConfig& config, GoalEnvironment& env);

}  // namespace mgp
