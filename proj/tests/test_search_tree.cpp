#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mgp/budget.hpp"
#include "mgp/search_tree.hpp"
#include "support.hpp"

using namespace mgp;

namespace {

State st(std::initializer_list<PropId> ids) { return State(64, std::vector<PropId>(ids)); }

}  // namespace

TEST_CASE("select_min orders by f, then larger g, then insertion") {
  SearchTree t(1.0);
  const NodeId r = t.reset(st({0}), 5, 1);
  t.pop_min();
  t.close(r);
  const NodeId a = t.add(st({1}), 1, 3, r, 0, 1);  // f 4
  const NodeId b = t.add(st({2}), 2, 2, r, 1, 1);  // f 4, larger g
  const NodeId c = t.add(st({3}), 2, 2, r, 2, 1);  // f 4, same g, later
  const NodeId d = t.add(st({4}), 0, 3, r, 3, 1);  // f 3
  CHECK(t.pop_min() == d);
  CHECK(t.pop_min() == b);
  CHECK(t.pop_min() == c);
  CHECK(t.pop_min() == a);
  CHECK(t.open_empty());
  CHECK_THROWS_AS(t.select_min(), EmptyOpen);
}

TEST_CASE("weight scales h") {
  SearchTree t(2.0);
  const NodeId r = t.reset(st({0}), 3, 1);
  CHECK(t.f(r) == doctest::Approx(6.0));
}

TEST_CASE("dead ends are stored closed") {
  SearchTree t;
  const NodeId r = t.reset(st({0}), 1, 1);
  const NodeId x = t.add(st({9}), 1, kInfiniteH, r, 0, 1);
  CHECK(t.node(x).list == NodeList::closed);
  CHECK(t.pop_min() == r);
  CHECK(t.open_empty());
}

TEST_CASE("re-keying keeps a single live heap entry") {
  SearchTree t;
  const NodeId r = t.reset(st({0}), 10, 1);
  const NodeId a = t.add(st({1}), 1, 10, r, 0, 1);
  t.set_path(a, 0, r, 0);
  t.set_heuristic(a, 0, 1);
  t.open(a);
  CHECK(t.open_size() == 2);
  CHECK(t.pop_min() == a);
  CHECK(t.pop_min() == r);
  CHECK(t.open_empty());
}

TEST_CASE("extract_plan follows parent pointers") {
  SearchTree t;
  const NodeId r = t.reset(st({0}), 0, 1);
  const NodeId a = t.add(st({1}), 1, 0, r, 7, 1);
  const NodeId b = t.add(st({2}), 2, 0, a, 3, 1);
  CHECK(t.extract_plan(b) == Plan{7, 3});
  CHECK(t.extract_plan(r).empty());
}

TEST_CASE("contains_goal prefers closed, then lowest g") {
  SearchTree t;
  const NodeId r = t.reset(st({0}), 0, 1);
  t.pop_min();
  t.close(r);
  const NodeId a = t.add(st({1, 5}), 3, 0, r, 0, 1);  // open
  const NodeId b = t.add(st({2, 5}), 4, 0, r, 1, 1);
  t.pop_min();
  t.close(a);
  (void)b;
  const Goal g = Goal::partial(64, std::vector<PropId>{5});
  CHECK(t.contains_goal(g) == a);
  const Goal only_b = Goal::partial(64, std::vector<PropId>{2});
  CHECK(t.contains_goal(only_b) == b);
  CHECK_FALSE(t.contains_goal(only_b, false));
  CHECK(t.contains_goal(Goal::complete_state(st({2, 5}))) == b);
  CHECK_FALSE(t.contains_goal(Goal::complete_state(st({2}))));
}

TEST_CASE("re-rooting keeps exactly the descendants (1000-node random tree)") {
  std::mt19937_64 rng(99);
  SearchTree t;
  const std::size_t n = 1000;
  auto state_of = [](std::size_t i) {
    State s(16);
    for (PropId b = 0; b < 16; ++b)
      if ((i >> b) & 1U) s.insert(b);
    return s;
  };
  t.reset(state_of(0), 0, 1);
  std::vector<NodeId> parent(n, kNoNode);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    parent[i] = static_cast<NodeId>(pick(rng));
    t.add(state_of(i), static_cast<std::int64_t>(i), 1, parent[i], static_cast<ActionId>(i), 1);
  }
  const std::size_t new_root = 17;
  // oracle: descendants by repeated parent-chain walk
  std::set<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j != kNoNode; j = parent[j]) {
      if (j == new_root) {
        keep.insert(i);
        break;
      }
      if (j == 0) break;
    }
  }
  t.delete_states_out_of_tree(state_of(new_root));
  CHECK(t.size() == keep.size());
  for (std::size_t i = 0; i < n; ++i) CHECK(t.find(state_of(i)).has_value() == keep.count(i) > 0);
  REQUIRE(t.find(state_of(new_root)));
  CHECK(t.root() == *t.find(state_of(new_root)));
  CHECK(t.node(t.root()).parent == kNoNode);
  // g values are kept as stored
  for (auto i : keep) CHECK(t.node(*t.find(state_of(i))).g == static_cast<std::int64_t>(i));
  // plans are relative to the new root
  for (auto i : keep) {
    std::size_t len = 0;
    for (std::size_t j = i; j != new_root; j = parent[j]) ++len;
    CHECK(t.extract_plan(*t.find(state_of(i))).size() == len);
  }
  CHECK_THROWS_AS(t.delete_states_out_of_tree(state_of(5000 % 65536 + 1001)), StateNotInTree);
}

TEST_CASE("update_search_tree: one heuristic call, OPEN becomes {s}") {
  const auto gp = oracle::load("blocksworld", "bw4-1");
  HeuristicEvaluator h(HeuristicKind::ff, gp.actions, gp.universe());
  SearchTree t;
  const NodeId r = t.reset(gp.init, h(gp.init, gp.goal), 1);
  t.pop_min();
  t.close(r);
  for (ActionId a = 0; a < gp.actions.size(); ++a) {
    if (!applicable(gp.init, gp.actions[a])) continue;
    State s = apply(gp.init, gp.actions[a]);
    t.add(s, 1, h(s, gp.goal), r, a, 1);
  }
  const std::size_t stored = t.size();
  REQUIRE(t.open_size() >= 2);
  const std::uint64_t before = h.calls();
  t.update_search_tree(gp.init, gp.goal, 2, h);
  CHECK(h.calls() - before == 1);
  CHECK(t.size() == stored);
  CHECK(t.open_size() == 1);
  CHECK(t.select_min() == r);
  CHECK(t.node(r).iteration == 2);
}

TEST_CASE("refresh_all evaluates every stored node") {
  const auto gp = oracle::load("blocksworld", "bw4-1");
  HeuristicEvaluator h(HeuristicKind::ff, gp.actions, gp.universe());
  SearchTree t;
  const NodeId r = t.reset(gp.init, h(gp.init, gp.goal), 1);
  for (ActionId a = 0; a < gp.actions.size(); ++a) {
    if (!applicable(gp.init, gp.actions[a])) continue;
    State s = apply(gp.init, gp.actions[a]);
    t.add(s, 1, h(s, gp.goal), r, a, 1);
  }
  const std::uint64_t before = h.calls();
  CHECK(t.refresh_all(gp.goal, 2, h) == t.size());
  CHECK(h.calls() - before == t.size());
  for (NodeId id = 0; id < t.size(); ++id) CHECK(t.node(id).iteration == 2);
}

TEST_CASE("node limit raises a memory budget error") {
  SearchTree t;
  t.set_node_limit(2);
  const NodeId r = t.reset(st({0}), 0, 1);
  t.add(st({1}), 1, 0, r, 0, 1);
  CHECK_THROWS_AS(t.add(st({2}), 1, 0, r, 1, 1), ResourceExceeded);
}
