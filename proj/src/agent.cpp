#include "mgp/agent.hpp"

#include <ostream>

namespace mgp {

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::success: return "success";
    case RunStatus::failure: return "failure";
    case RunStatus::budget: return "budget";
  }
  return "?";
}

AgentRun::AgentRun(const GroundProblem& problem_, const MgpConfig& config_, GoalEnvironment& env_,
                   std::string algorithm)
    : problem(problem_),
      config(config_),
      env(env_),
      h(config_.heuristic, problem_.actions, problem_.universe(), &env_.counter()),
      budget(config_.budgets),
      tree(config_.weight),
      s(problem_.init),
      g(problem_.goal) {
  trace.algorithm = std::move(algorithm);
  std::size_t cap = config.budgets.max_nodes;
  if (cap == 0) cap = node_cap_for_memory(config.budgets.memory_bytes, problem.universe());
  tree.set_node_limit(cap);
}

void AgentRun::seed_tree(std::uint32_t iteration) { tree.reset(s, h(s, g), iteration); }

SearchOutcome AgentRun::run_search(std::uint32_t iteration) {
  EpisodeRecord rec;
  rec.iteration = iteration;
  rec.t_begin = env.counter().t;
  rec.tree_size_before = tree.size();
  trace.events.push_back({TraceEvent::Kind::search, rec.t_begin, trace.episodes.size(), 0});
  trace.episodes.push_back(rec);
  SearchOutcome out =
      search(actions(), tree, g, iteration, h, SearchHooks{&env.counter(), &budget});
  auto& stored = trace.episodes.back();
  stored.t_end = env.counter().t;
  stored.outcome = out;
  trace.expansions += out.expanded;
  return out;
}

void AgentRun::install_goal(NodeId goal_node) {
  if (env.installed() || !env.config().enabled) return;
  g = env.install_initial_goal(tree.node(goal_node).state);
  trace.installed_goal = g;
}

bool AgentRun::observe_goal() {
  auto next = env.update_goal(g);
  if (!next) return false;
  trace.events.push_back(
      {TraceEvent::Kind::goal_change, env.counter().t, env.changes().size() - 1, 0});
  const bool moved = !(*next == g);
  g = std::move(*next);
  if (moved) ++trace.goal_changes;
  return moved;
}

bool AgentRun::execute_step(Plan& plan) {
  if (plan.empty()) throw InternalError("execute_step on an empty plan");
  const ActionId a = plan.front();
  if (!applicable(s, problem.actions[a])) {
    throw InternalError("extracted plan is not applicable: " + problem.actions[a].name);
  }
  s = apply(s, problem.actions[a]);
  plan.erase(plan.begin());
  trace.events.push_back({TraceEvent::Kind::exec, env.counter().t, trace.executed.size(), a});
  trace.executed.push_back(a);
  trace.executed_t.push_back(env.counter().t);
  const bool moved = observe_goal();
  budget.check_time();
  return moved;
}

void AgentRun::record_delay(DelayKind kind) {
  trace.events.push_back(
      {TraceEvent::Kind::delay, env.counter().t, 0, static_cast<std::uint64_t>(kind)});
}

void AgentRun::reroot() {
  tree.delete_states_out_of_tree(s);
  trace.events.push_back({TraceEvent::Kind::reroot, env.counter().t, 0, tree.size()});
}

void AgentRun::record_update(std::size_t stored, std::uint64_t calls) {
  trace.events.push_back({TraceEvent::Kind::update, env.counter().t, trace.updates.size(), calls});
  trace.updates.push_back({stored, calls});
}

AgentTrace AgentRun::finish(RunStatus status, std::string detail) {
  trace.status = status;
  trace.detail = std::move(detail);
  trace.goal_log = env.changes();
  trace.final_state = s;
  trace.final_goal = g;
  trace.heuristic_calls = h.calls();
  trace.final_t = env.counter().t;
  trace.cpu_seconds = budget.elapsed_seconds();
  return std::move(trace);
}

namespace {

void write_ids(std::ostream& out, const std::vector<ActionId>& ids) {
  bool first = true;
  for (ActionId a : ids) {
    if (!first) out << ',';
    first = false;
    if (a == kNoAction) {
      out << '-';
    } else {
      out << a;
    }
  }
}

}  // namespace

void write_trace(std::ostream& out, const AgentTrace& trace, const GroundProblem& problem) {
  out << "RUN alg=" << trace.algorithm << " domain=" << problem.domain_name
      << " problem=" << problem.problem_name << '\n';
  for (const auto& e : trace.events) {
    switch (e.kind) {
      case TraceEvent::Kind::search: {
        const auto& ep = trace.episodes[e.ref];
        out << "SEARCH-BEGIN i=" << ep.iteration << " t=" << ep.t_begin
            << " stored=" << ep.tree_size_before << '\n';
        out << "SEARCH-END i=" << ep.iteration << " t=" << ep.t_end
            << " result=" << (ep.outcome.success ? "success" : "failure")
            << " expanded=" << ep.outcome.expanded << " generated=" << ep.outcome.generated
            << " hcalls=" << ep.outcome.heuristic_calls << '\n';
        break;
      }
      case TraceEvent::Kind::exec:
        out << "EXEC t=" << e.t << " step=" << e.ref << " action=" << e.value << ' '
            << problem.actions[e.value].name << '\n';
        break;
      case TraceEvent::Kind::goal_change: {
        const auto& c = trace.goal_log[e.ref];
        out << "GOAL-CHANGE t=" << c.t << " n=" << c.steps << " actions=";
        write_ids(out, c.actions);
        out << '\n';
        break;
      }
      case TraceEvent::Kind::delay:
        out << "DELAY t=" << e.t << " via="
            << (e.value == static_cast<std::uint64_t>(DelayKind::open_check) ? "oc" : "pf") << '\n';
        break;
      case TraceEvent::Kind::reroot:
        out << "REROOT t=" << e.t << " stored=" << e.value << '\n';
        break;
      case TraceEvent::Kind::update: {
        const auto& u = trace.updates[e.ref];
        out << "UPDATE t=" << e.t << " stored=" << u.stored_nodes << " hcalls=" << u.heuristic_calls
            << '\n';
        break;
      }
    }
  }
  out << "STATUS " << to_string(trace.status) << " t=" << trace.final_t
      << " executed=" << trace.executed.size() << " episodes=" << trace.episodes.size();
  if (!trace.detail.empty()) out << " detail=" << trace.detail;
  out << '\n';
}

bool replay_trace(const GroundProblem& problem, const AgentTrace& trace, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why != nullptr) *why = std::move(msg);
    return false;
  };
  State s = problem.init;
  for (std::size_t i = 0; i < trace.executed.size(); ++i) {
    const ActionId a = trace.executed[i];
    if (a >= problem.actions.size() || !applicable(s, problem.actions[a])) {
      return fail("executed action " + std::to_string(i) + " is not applicable");
    }
    s = apply(s, problem.actions[a]);
  }
  if (!(s == trace.final_state)) return fail("replayed state differs from recorded final state");

  Goal goal = problem.goal;
  if (trace.installed_goal) {
    State cur = trace.installed_goal->mask();
    for (const auto& change : trace.goal_log) {
      for (ActionId a : change.actions) {
        if (a == kNoAction) continue;
        if (a >= problem.actions.size() || !applicable(cur, problem.actions[a])) {
          return fail("goal mutation at t=" + std::to_string(change.t) + " is not applicable");
        }
        cur = apply(cur, problem.actions[a]);
      }
    }
    goal = Goal::complete_state(cur);
  } else if (!trace.goal_log.empty()) {
    return fail("goal log present without an installed goal");
  }
  if (!(goal == trace.final_goal)) return fail("replayed goal differs from recorded final goal");
  if (trace.status == RunStatus::success && !goal_satisfied(s, goal)) {
    return fail("success recorded but final state does not satisfy the final goal");
  }
  return true;
}

}  // namespace mgp
