#include "mgp/baselines.hpp"

namespace mgp {

namespace {

RunStatus sastar_loop(AgentRun& run) {
  while (!goal_satisfied(run.s, run.g)) {
    run.seed_tree(1);
    const SearchOutcome out = run.run_search(1);
    if (!out.success) return RunStatus::failure;
    run.install_goal(out.goal_node);
    Plan plan = run.tree.extract_plan(out.goal_node);
    while (!plan.empty() && !goal_satisfied(run.s, run.g)) {
      if (run.execute_step(plan)) break;
    }
  }
  return RunStatus::success;
}

RunStatus gfra_loop(AgentRun& run) {
  std::uint32_t iteration = 1;
  run.seed_tree(iteration);
  while (!goal_satisfied(run.s, run.g)) {
    const SearchOutcome out = run.run_search(iteration);
    if (!out.success) return RunStatus::failure;
    run.install_goal(out.goal_node);

    NodeId target = out.goal_node;
    for (;;) {
      Plan plan = run.tree.extract_plan(target);
      bool leads_to_goal = validate_plan(run.s, plan, run.g, run.actions());
      while (!goal_satisfied(run.s, run.g) && leads_to_goal) {
        if (run.execute_step(plan)) {
          leads_to_goal = validate_plan(run.s, plan, run.g, run.actions());
        }
      }
      if (goal_satisfied(run.s, run.g)) return RunStatus::success;
      run.reroot();
      auto hit = run.tree.contains_goal(run.g, /*include_open=*/false);
      if (!hit) break;
      run.record_delay(DelayKind::open_check);
      target = *hit;
    }

    ++iteration;
    const std::uint64_t before = run.h.calls();
    const std::size_t stored = run.tree.refresh_all(run.g, iteration, run.h);
    run.record_update(stored, run.h.calls() - before);
    if (run.tree.open_empty()) {
      // frontier exhausted inside the kept subtree: resume from all stored nodes
      for (NodeId id = 0; id < run.tree.size(); ++id) run.tree.open(id);
    }
    run.budget.check_time();
  }
  return RunStatus::success;
}

template <typename Loop>
AgentTrace run_with(const GroundProblem& problem, const MgpConfig& config, GoalEnvironment& env,
                    std::string tag, Loop loop) {
  AgentRun run(problem, config, env, std::move(tag));
  try {
    return run.finish(loop(run));
  } catch (const ResourceExceeded& e) {
    return run.finish(RunStatus::budget, std::string(to_string(e.kind())));
  }
}

}  // namespace

AgentTrace run_sastar(const GroundProblem& problem, const MgpConfig& config, GoalEnvironment& env) {
  return run_with(problem, config, env, "sastar", sastar_loop);
}

AgentTrace run_gfra(const GroundProblem& problem, const MgpConfig& config, GoalEnvironment& env) {
  return run_with(problem, config, env, "gfra", gfra_loop);
}

}  // namespace mgp
