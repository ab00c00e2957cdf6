#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgp/heuristics.hpp"
#include "mgp/goal_dynamics.hpp"
#include "support.hpp"

using namespace mgp;

namespace {

HValue oracle_h(const std::vector<GroundAction>& acts, std::size_t universe, const State& s,
                const Goal& g, bool use_max) {
  const auto cost = oracle::relaxed_costs(acts, universe, oracle::to_set(s), use_max);
  HValue total = 0;
  for (auto p : g.props()) {
    if (cost[p] < 0) return kInfiniteH;
    total = use_max ? std::max<HValue>(total, cost[p]) : total + cost[p];
  }
  return total;
}

}  // namespace

TEST_CASE("names round-trip") {
  for (auto k : {HeuristicKind::ff, HeuristicKind::add, HeuristicKind::max,
                 HeuristicKind::goal_count, HeuristicKind::zero}) {
    CHECK(parse_heuristic_kind(to_string(k)) == k);
  }
  CHECK(parse_heuristic_kind("goalcount") == HeuristicKind::goal_count);
  CHECK_FALSE(parse_heuristic_kind("lmcut"));
  CHECK(is_admissible(HeuristicKind::max));
  CHECK_FALSE(is_admissible(HeuristicKind::ff));
}

TEST_CASE("sussman anomaly values") {
  const auto gp = oracle::load("blocksworld", "sussman");
  auto eval = [&](HeuristicKind k) {
    HeuristicEvaluator h(k, gp.actions, gp.universe());
    return h(gp.init, gp.goal);
  };
  CHECK(eval(HeuristicKind::max) == 3);
  CHECK(eval(HeuristicKind::add) == 5);
  CHECK(eval(HeuristicKind::ff) == 5);
  CHECK(eval(HeuristicKind::goal_count) == 2);
  CHECK(eval(HeuristicKind::zero) == 0);
}

TEST_CASE("h_max and h_add agree with a naive fixpoint") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t props = 12 + trial % 20;
    const auto acts = oracle::random_actions(rng, props, 10 + trial % 30);
    const State s = oracle::random_state(rng, props, 0.25);
    const State gs = oracle::random_state(rng, props, 0.2);
    const Goal g = Goal::partial(props, gs.ids());
    HeuristicEvaluator hmax(HeuristicKind::max, acts, props);
    HeuristicEvaluator hadd(HeuristicKind::add, acts, props);
    CHECK(hmax(s, g) == oracle_h(acts, props, s, g, true));
    CHECK(hadd(s, g) == oracle_h(acts, props, s, g, false));
  }
}

TEST_CASE("h_ff: zero iff satisfied, infinite iff relaxed-unreachable, bounded by h_max") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t props = 10 + trial % 15;
    const auto acts = oracle::random_actions(rng, props, 8 + trial % 25);
    const State s = oracle::random_state(rng, props, 0.3);
    const Goal g = Goal::partial(props, oracle::random_state(rng, props, 0.2).ids());
    HeuristicEvaluator hff(HeuristicKind::ff, acts, props);
    HeuristicEvaluator hmax(HeuristicKind::max, acts, props);
    const HValue f = hff(s, g);
    const HValue m = hmax(s, g);
    CHECK(is_infinite(f) == is_infinite(m));
    CHECK((f == 0) == goal_satisfied(s, g));
    if (!is_infinite(f)) {
      CHECK(m <= f);
      CHECK(f <= static_cast<HValue>(acts.size()));
    }
  }
}

TEST_CASE("h_max is admissible against BFS on small tasks") {
  std::mt19937_64 rng(5);
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t props = 8;
    const auto acts = oracle::random_actions(rng, props, 12);
    const State s = oracle::random_state(rng, props, 0.3);
    const Goal g = Goal::partial(props, oracle::random_state(rng, props, 0.2).ids());
    HeuristicEvaluator hmax(HeuristicKind::max, acts, props);
    const auto opt = oracle::bfs_length(acts, oracle::to_set(s), g);
    const HValue h = hmax(s, g);
    if (opt) {
      ++solved;
      CHECK(h <= static_cast<HValue>(*opt));
    }
  }
  CHECK(solved > 10);
}

TEST_CASE("each evaluation ticks the work counter once") {
  const auto gp = oracle::load("blocksworld", "bw4-1");
  CostCounter counter;
  HeuristicEvaluator h(HeuristicKind::ff, gp.actions, gp.universe(), &counter);
  for (int i = 0; i < 5; ++i) h(gp.init, gp.goal);
  CHECK(counter.t == 5);
  CHECK(h.calls() == 5);
}

TEST_CASE("complete goals are evaluated over all their propositions") {
  const auto gp = oracle::load("blocksworld", "bw3-1");
  HeuristicEvaluator h(HeuristicKind::goal_count, gp.actions, gp.universe());
  const Goal g = Goal::complete_state(gp.init);
  CHECK(h(gp.init, g) == 0);
}
