#include "mgp/heuristics.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace mgp {

std::string_view to_string(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::ff: return "ff";
    case HeuristicKind::add: return "add";
    case HeuristicKind::max: return "max";
    case HeuristicKind::goal_count: return "goalcount";
    case HeuristicKind::zero: return "zero";
  }
  return "?";
}

std::optional<HeuristicKind> parse_heuristic_kind(std::string_view name) {
  if (name == "ff") return HeuristicKind::ff;
  if (name == "add") return HeuristicKind::add;
  if (name == "max") return HeuristicKind::max;
  if (name == "goalcount" || name == "goal_count") return HeuristicKind::goal_count;
  if (name == "zero" || name == "blind") return HeuristicKind::zero;
  return std::nullopt;
}

bool is_admissible(HeuristicKind kind) {
  return kind == HeuristicKind::max || kind == HeuristicKind::zero;
}

void RelaxedGraphWorkspace::reset(std::size_t props, std::size_t actions) {
  prop_cost.assign(props, kInfiniteH);
  action_cost.assign(actions, kInfiniteH);
  unsatisfied.resize(actions);
  marked.assign(props, 0);
  selected.assign(actions, 0);
  frontier.clear();
  next_frontier.clear();
  for (auto& layer : goal_layers) layer.clear();
}

HeuristicEvaluator::HeuristicEvaluator(HeuristicKind kind, std::span<const GroundAction> actions,
                                       std::size_t universe, CostCounter* counter)
    : kind_(kind),
      actions_(actions),
      universe_(universe),
      counter_(counter),
      consumers_(universe),
      achievers_(universe) {
  for (ActionId a = 0; a < actions.size(); ++a) {
    if (actions[a].pre.empty()) no_pre_.push_back(a);
    for (PropId p : actions[a].pre) consumers_[p].push_back(a);
    for (PropId p : actions[a].add) achievers_[p].push_back(a);
  }
}

HValue HeuristicEvaluator::operator()(const State& s, const Goal& g) {
  ++calls_;
  if (counter_ != nullptr) counter_->tick();
  switch (kind_) {
    case HeuristicKind::zero: return 0;
    case HeuristicKind::goal_count: {
      HValue missing = 0;
      for (PropId p : g.props()) missing += s.contains(p) ? 0 : 1;
      return missing;
    }
    case HeuristicKind::max: return cost_based(s, g, true);
    case HeuristicKind::add: return cost_based(s, g, false);
    case HeuristicKind::ff: return relaxed_plan(s, g);
  }
  return 0;
}

HValue HeuristicEvaluator::cost_based(const State& s, const Goal& g, bool use_max) {
  if (goal_satisfied(s, g)) return 0;
  auto& ws = ws_;
  ws.reset(universe_, actions_.size());
  for (ActionId a = 0; a < actions_.size(); ++a) {
    ws.unsatisfied[a] = static_cast<std::uint32_t>(actions_[a].pre.size());
    ws.action_cost[a] = 0;
  }
  using Entry = std::pair<HValue, PropId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  auto relax = [&](ActionId a, HValue base) {
    const HValue c = base + actions_[a].cost;
    for (PropId q : actions_[a].add) {
      if (c < ws.prop_cost[q]) {
        ws.prop_cost[q] = c;
        queue.emplace(c, q);
      }
    }
  };
  for (PropId p : s.ids()) {
    ws.prop_cost[p] = 0;
    queue.emplace(0, p);
  }
  for (ActionId a : no_pre_) relax(a, 0);

  std::size_t goals_left = 0;
  for (PropId p : g.props()) {
    ws.marked[p] = 2;  // goal, unsettled
    ++goals_left;
  }
  while (!queue.empty() && goals_left > 0) {
    auto [c, p] = queue.top();
    queue.pop();
    if (c != ws.prop_cost[p] || ws.marked[p] == 1) continue;
    if (ws.marked[p] == 2) --goals_left;
    ws.marked[p] = 1;
    for (ActionId a : consumers_[p]) {
      HValue& acc = ws.action_cost[a];
      acc = use_max ? std::max(acc, c) : acc + c;
      if (--ws.unsatisfied[a] == 0) relax(a, acc);
    }
  }
  HValue total = 0;
  for (PropId p : g.props()) {
    const HValue c = ws.prop_cost[p];
    if (is_infinite(c)) return kInfiniteH;
    total = use_max ? std::max(total, c) : total + c;
  }
  return total;
}

HValue HeuristicEvaluator::relaxed_plan(const State& s, const Goal& g) {
  if (goal_satisfied(s, g)) return 0;
  auto& ws = ws_;
  ws.reset(universe_, actions_.size());
  auto& level = ws.prop_cost;
  auto& action_level = ws.action_cost;
  for (ActionId a = 0; a < actions_.size(); ++a) {
    ws.unsatisfied[a] = static_cast<std::uint32_t>(actions_[a].pre.size());
  }
  std::size_t goals_left = 0;
  for (PropId p : g.props()) {
    if (!s.contains(p)) ++goals_left;
  }
  for (PropId p : s.ids()) {
    level[p] = 0;
    ws.frontier.push_back(p);
  }

  // Forward phase: layer by layer until every goal has a level.
  HValue layer = 0;
  auto fire = [&](ActionId a) {
    action_level[a] = layer;
    for (PropId q : actions_[a].add) {
      if (is_infinite(level[q])) {
        level[q] = layer + 1;
        ws.next_frontier.push_back(q);
        if (g.mask().contains(q)) --goals_left;
      }
    }
  };
  for (ActionId a : no_pre_) fire(a);
  while (goals_left > 0) {
    for (PropId p : ws.frontier) {
      for (ActionId a : consumers_[p]) {
        if (--ws.unsatisfied[a] == 0) fire(a);
      }
    }
    if (ws.next_frontier.empty()) return kInfiniteH;
    ws.frontier.swap(ws.next_frontier);
    ws.next_frontier.clear();
    ++layer;
  }

  // Backward phase: earliest achiever, lowest id first.
  std::size_t top = 0;
  for (PropId p : g.props()) top = std::max(top, static_cast<std::size_t>(level[p]));
  if (ws.goal_layers.size() < top + 1) ws.goal_layers.resize(top + 1);
  auto queue_subgoal = [&](PropId p) {
    if (level[p] > 0 && ws.marked[p] == 0) {
      ws.marked[p] = 1;
      ws.goal_layers[static_cast<std::size_t>(level[p])].push_back(p);
    }
  };
  for (PropId p : g.props()) queue_subgoal(p);
  HValue cost = 0;
  for (std::size_t l = top; l >= 1; --l) {
    auto& subgoals = ws.goal_layers[l];
    std::sort(subgoals.begin(), subgoals.end());
    for (std::size_t k = 0; k < subgoals.size(); ++k) {
      const PropId p = subgoals[k];
      if (ws.marked[p] == 2) continue;
      ActionId chosen = kNoAction;
      for (ActionId a : achievers_[p]) {
        if (action_level[a] == static_cast<HValue>(l) - 1) {
          chosen = a;
          break;
        }
      }
      ws.selected[chosen] = 1;
      cost += actions_[chosen].cost;
      for (PropId q : actions_[chosen].add) {
        if (level[q] == static_cast<HValue>(l)) ws.marked[q] = 2;
      }
      for (PropId q : actions_[chosen].pre) queue_subgoal(q);
    }
  }
  return cost;
}

HValue evaluate(HeuristicKind kind, const State& s, const Goal& g,
                std::span<const GroundAction> actions) {
  HeuristicEvaluator h(kind, actions, s.universe());
  return h(s, g);
}

}  // namespace mgp
