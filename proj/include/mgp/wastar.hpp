#pragma once

// Weighted A* over ground STRIPS states with node reuse across episodes:
// reopening on cheaper paths and lazy refresh of heuristic values whose
// iteration stamp predates the current episode.

#include <cstdint>
#include <span>

#include "mgp/budget.hpp"
#include "mgp/goal_dynamics.hpp"
#include "mgp/heuristics.hpp"
#include "mgp/search_tree.hpp"

namespace mgp {

struct SearchOutcome {
  bool success = false;
  NodeId goal_node = kNoNode;
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  std::uint64_t heuristic_calls = 0;
};

struct SearchHooks {
  CostCounter* counter = nullptr;  // ticked once per expansion
  Budget* budget = nullptr;
};

/// Runs until a goal node is selected (it stays in OPEN) or OPEN is empty.
/// The tree must already be seeded. Throws ResourceExceeded on budget
/// exhaustion.
SearchOutcome search(std::span<const GroundAction> actions, SearchTree& tree, const Goal& goal,
                     std::uint32_t iteration, HeuristicEvaluator& h, SearchHooks hooks = {});

}  // namespace mgp
