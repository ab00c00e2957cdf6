#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgp/wastar.hpp"
#include "support.hpp"

using namespace mgp;

namespace {

struct Result {
  SearchOutcome out;
  Plan plan;
};

Result solve(const GroundProblem& gp, HeuristicKind kind, double w, const State& s0,
             const Goal& goal, CostCounter* counter = nullptr) {
  HeuristicEvaluator h(kind, gp.actions, gp.universe(), counter);
  SearchTree t(w);
  t.reset(s0, h(s0, goal), 1);
  Result r;
  r.out = search(gp.actions, t, goal, 1, h, {counter, nullptr});
  if (r.out.success) r.plan = t.extract_plan(r.out.goal_node);
  return r;
}

}  // namespace

TEST_CASE("already satisfied goal needs no expansion") {
  const auto gp = oracle::load("blocksworld", "bw3-1");
  const auto r = solve(gp, HeuristicKind::ff, 1.0, gp.init, Goal::complete_state(gp.init));
  CHECK(r.out.success);
  CHECK(r.out.expanded == 0);
  CHECK(r.plan.empty());
}

TEST_CASE("unsolvable task fails with an exhausted OPEN") {
  std::vector<GroundAction> acts(1);
  acts[0].name = "a";
  acts[0].pre = {0};
  acts[0].add = {1};
  GroundProblem gp;
  gp.actions = acts;
  gp.propositions = {"p", "q", "r"};
  const State s0(3, std::vector<PropId>{0});
  const auto r = solve(gp, HeuristicKind::zero, 1.0, s0, Goal::partial(3, std::vector<PropId>{2}));
  CHECK_FALSE(r.out.success);
}

TEST_CASE("sussman anomaly: optimal plan of length 6") {
  const auto gp = oracle::load("blocksworld", "sussman");
  const auto r = solve(gp, HeuristicKind::max, 1.0, gp.init, gp.goal);
  REQUIRE(r.out.success);
  CHECK(r.plan.size() == 6);
  CHECK(validate_plan(gp.init, r.plan, gp.goal, gp.actions));
}

TEST_CASE("w = 1 with h_max matches BFS on benchmark instances") {
  for (const char* p : {"bw3-1", "bw3-2", "bw3-3", "bw4-1", "bw4-2", "sussman"}) {
    const auto gp = oracle::load("blocksworld", p);
    const auto opt = oracle::bfs_length(gp.actions, oracle::to_set(gp.init), gp.goal);
    const auto r = solve(gp, HeuristicKind::max, 1.0, gp.init, gp.goal);
    REQUIRE(opt);
    CHECK(r.plan.size() == *opt);
  }
}

TEST_CASE("weighted search returns valid plans") {
  const auto gp = oracle::load("blocksworld", "bw6-1");
  for (double w : {1.5, 2.0, 5.0}) {
    const auto r = solve(gp, HeuristicKind::ff, w, gp.init, gp.goal);
    REQUIRE(r.out.success);
    CHECK(validate_plan(gp.init, r.plan, gp.goal, gp.actions));
  }
}

TEST_CASE("counter ticks once per expansion and once per evaluation") {
  const auto gp = oracle::load("blocksworld", "bw4-1");
  CostCounter counter;
  const auto r = solve(gp, HeuristicKind::ff, 1.0, gp.init, gp.goal, &counter);
  REQUIRE(r.out.success);
  // the seeding evaluation is the +1
  CHECK(counter.t == r.out.expanded + r.out.heuristic_calls + 1);
}

TEST_CASE("expansion budget is enforced") {
  const auto gp = oracle::load("blocksworld", "bw6-1");
  HeuristicEvaluator h(HeuristicKind::zero, gp.actions, gp.universe());
  SearchTree t;
  t.reset(gp.init, 0, 1);
  Budgets lim;
  lim.cpu_seconds = 0;
  lim.max_expansions = 10;
  Budget b(lim);
  CHECK_THROWS_AS(search(gp.actions, t, gp.goal, 1, h, {nullptr, &b}), ResourceExceeded);
}
