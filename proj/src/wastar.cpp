#include "mgp/wastar.hpp"

namespace mgp {

SearchOutcome search(std::span<const GroundAction> actions, SearchTree& tree, const Goal& goal,
                     std::uint32_t iteration, HeuristicEvaluator& h, SearchHooks hooks) {
  SearchOutcome out;
  const std::uint64_t calls_before = h.calls();
  while (!tree.open_empty()) {
    const NodeId id = tree.select_min();
    if (goal_satisfied(tree.node(id).state, goal)) {
      out.success = true;
      out.goal_node = id;
      break;
    }
    tree.pop_min();
    ++out.expanded;
    if (hooks.counter != nullptr) hooks.counter->tick();
    if (hooks.budget != nullptr) hooks.budget->on_expansion();

    // node references are invalidated by insertions below
    const State parent_state = tree.node(id).state;
    const std::int64_t parent_g = tree.node(id).g;
    for (ActionId a = 0; a < actions.size(); ++a) {
      if (!applicable(parent_state, actions[a])) continue;
      State succ = apply(parent_state, actions[a]);
      const std::int64_t cost = parent_g + actions[a].cost;
      ++out.generated;
      const auto known = tree.find(succ);
      if (!known) {
        const HValue hv = h(succ, goal);
        tree.add(std::move(succ), cost, hv, id, a, iteration);
        continue;
      }
      const NodeId sid = *known;
      bool requeue = false;
      if (cost < tree.node(sid).g) {
        tree.set_path(sid, cost, id, a);
        requeue = true;
      }
      if (tree.node(sid).iteration < iteration) {
        tree.set_heuristic(sid, h(tree.node(sid).state, goal), iteration);
        requeue = true;
      }
      if (requeue) tree.open(sid);
    }
  }
  out.heuristic_calls = h.calls() - calls_before;
  return out;
}

}  // namespace mgp
