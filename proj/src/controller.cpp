#include "mgp/controller.hpp"

namespace mgp {

bool plan_follow_holds(HValue h_s_g, HValue h_s_p, HValue h_p_g, double delay_coefficient) {
  if (is_infinite(h_s_g) || is_infinite(h_s_p) || is_infinite(h_p_g)) return false;
  return static_cast<double>(h_s_g) * delay_coefficient >
         static_cast<double>(h_s_p) + static_cast<double>(h_p_g);
}

HValue GoalPairMemo::get(const Goal& p, const Goal& g, HeuristicEvaluator& h) {
  if (p_ && g_ && *p_ == p && *g_ == g) return value_;
  value_ = h(p.mask(), g);
  p_ = p;
  g_ = g;
  return value_;
}

DelayDecision can_delay_new_search(const SearchTree& tree, const State& s, const Goal& g,
                                   const Goal& p, std::optional<NodeId> target,
                                   const MgpConfig& config, HeuristicEvaluator& h,
                                   GoalPairMemo& memo) {
  if (config.open_check) {
    if (auto hit = tree.contains_goal(g, true)) return {DelayKind::open_check, *hit};
  }
  if (config.plan_follow && target && *target != tree.root()) {
    const HValue h_s_g = h(s, g);
    if (is_infinite(h_s_g)) return {};
    const HValue h_s_p = h(s, p);
    if (is_infinite(h_s_p)) return {};
    const HValue h_p_g = memo.get(p, g, h);
    if (plan_follow_holds(h_s_g, h_s_p, h_p_g, config.delay_coefficient)) {
      return {DelayKind::plan_follow, *target};
    }
  }
  return {};
}

namespace {

std::string algorithm_tag(const MgpConfig& c) {
  if (c.open_check && c.plan_follow) return "mgp-ocpf";
  if (c.open_check) return "mgp-oc";
  if (c.plan_follow) return "mgp-pf";
  return "mgp";
}

RunStatus mgp_loop(AgentRun& run) {
  std::uint32_t iteration = 1;
  run.seed_tree(iteration);
  GoalPairMemo memo;
  Goal previous = run.g;
  std::optional<State> target_state;

  while (!goal_satisfied(run.s, run.g)) {
    const SearchOutcome out = run.run_search(iteration);
    if (!out.success) return RunStatus::failure;
    run.install_goal(out.goal_node);

    DelayDecision decision{DelayKind::must_search, out.goal_node};
    bool fresh = true;
    for (;;) {
      if (!fresh) {
        run.observe_goal();
        if (goal_satisfied(run.s, run.g)) return RunStatus::success;
        std::optional<NodeId> target;
        if (target_state) target = run.tree.find(*target_state);
        decision = can_delay_new_search(run.tree, run.s, run.g, previous, target, run.config,
                                        run.h, memo);
        if (decision.kind == DelayKind::must_search) break;
        run.record_delay(decision.kind);
      }
      fresh = false;

      Plan plan = run.tree.extract_plan(decision.node);
      const bool path_follow = decision.kind == DelayKind::plan_follow;
      if (!path_follow) {
        previous = run.g;
        target_state = run.tree.node(decision.node).state;
      }
      bool leads_to_goal = validate_plan(run.s, plan, run.g, run.actions());
      while ((!goal_satisfied(run.s, run.g) && leads_to_goal) || (path_follow && !plan.empty())) {
        if (run.execute_step(plan)) {
          leads_to_goal = validate_plan(run.s, plan, run.g, run.actions());
        }
      }
      if (goal_satisfied(run.s, run.g)) return RunStatus::success;
      run.reroot();
    }

    ++iteration;
    const std::uint64_t before = run.h.calls();
    const std::size_t stored = run.tree.size();
    run.tree.update_search_tree(run.s, run.g, iteration, run.h);
    run.record_update(stored, run.h.calls() - before);
    run.budget.check_time();
  }
  return RunStatus::success;
}

}  // namespace

AgentTrace run_mgp(const GroundProblem& problem, const MgpConfig& config, GoalEnvironment& env) {
  AgentRun run(problem, config, env, algorithm_tag(config));
  try {
    return run.finish(mgp_loop(run));
  } catch (const ResourceExceeded& e) {
    return run.finish(RunStatus::budget, std::string(to_string(e.kind())));
  }
}

}  // namespace mgp
