#pragma once

// Test-side oracles. These deliberately avoid the library's State/apply code:
// states are std::set<PropId> and transitions are written out longhand.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mgp/pddl.hpp"
#include "mgp/strips.hpp"

namespace oracle {

using PropSet = std::set<mgp::PropId>;

inline std::filesystem::path bench(const std::string& rel) {
  return std::filesystem::path(MGP_BENCH_DIR) / rel;
}

inline mgp::GroundProblem load(const std::string& domain_dir, const std::string& problem) {
  return mgp::pddl::load(bench(domain_dir + "/domain.pddl"),
                         bench(domain_dir + "/" + problem + ".pddl"));
}

inline PropSet to_set(const mgp::State& s) {
  auto ids = s.ids();
  return PropSet(ids.begin(), ids.end());
}

inline bool subset(const std::vector<mgp::PropId>& xs, const PropSet& s) {
  for (auto x : xs) {
    if (!s.count(x)) return false;
  }
  return true;
}

inline PropSet successor(const PropSet& s, const mgp::GroundAction& a) {
  PropSet out;
  for (auto p : s) {
    bool deleted = false;
    for (auto d : a.del) deleted = deleted || d == p;
    if (!deleted) out.insert(p);
  }
  for (auto p : a.add) out.insert(p);
  return out;
}

inline bool satisfies(const PropSet& s, const mgp::Goal& g) {
  if (g.complete()) return s == to_set(g.mask());
  return subset(g.props(), s);
}

/// Optimal plan length by breadth-first search, or nullopt if unreachable.
inline std::optional<std::size_t> bfs_length(const std::vector<mgp::GroundAction>& actions,
                                             const PropSet& init, const mgp::Goal& goal,
                                             std::size_t max_states = 2'000'000) {
  std::map<PropSet, std::size_t> dist;
  std::queue<PropSet> q;
  dist[init] = 0;
  q.push(init);
  while (!q.empty()) {
    PropSet s = q.front();
    q.pop();
    const std::size_t d = dist[s];
    if (satisfies(s, goal)) return d;
    for (const auto& a : actions) {
      if (!subset(a.pre, s)) continue;
      PropSet t = successor(s, a);
      if (dist.emplace(t, d + 1).second) {
        q.push(std::move(t));
        if (dist.size() > max_states) return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

/// All states reachable from init.
inline std::set<PropSet> reachable(const std::vector<mgp::GroundAction>& actions,
                                   const PropSet& init) {
  std::set<PropSet> seen{init};
  std::vector<PropSet> stack{init};
  while (!stack.empty()) {
    PropSet s = stack.back();
    stack.pop_back();
    for (const auto& a : actions) {
      if (!subset(a.pre, s)) continue;
      PropSet t = successor(s, a);
      if (seen.insert(t).second) stack.push_back(std::move(t));
    }
  }
  return seen;
}

/// Relaxed cost of each proposition by naive fixpoint iteration
/// (max or sum aggregation over preconditions). -1 = unreachable.
inline std::vector<std::int64_t> relaxed_costs(const std::vector<mgp::GroundAction>& actions,
                                               std::size_t universe, const PropSet& s,
                                               bool use_max) {
  std::vector<std::int64_t> cost(universe, -1);
  for (auto p : s) cost[p] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& a : actions) {
      std::int64_t c = 0;
      bool ok = true;
      for (auto p : a.pre) {
        if (cost[p] < 0) {
          ok = false;
          break;
        }
        c = use_max ? std::max(c, cost[p]) : c + cost[p];
      }
      if (!ok) continue;
      for (auto q : a.add) {
        if (cost[q] < 0 || cost[q] > c + a.cost) {
          cost[q] = c + a.cost;
          changed = true;
        }
      }
    }
  }
  return cost;
}

/// Random ground task over `props` propositions. Every action has 1..3
/// preconditions and non-empty add.
inline std::vector<mgp::GroundAction> random_actions(std::mt19937_64& rng, std::size_t props,
                                                     std::size_t count) {
  std::uniform_int_distribution<mgp::PropId> pick(0, static_cast<mgp::PropId>(props - 1));
  std::uniform_int_distribution<int> small(1, 3);
  std::vector<mgp::GroundAction> out;
  for (std::size_t i = 0; i < count; ++i) {
    mgp::GroundAction a;
    a.name = "a" + std::to_string(i);
    for (int k = small(rng); k > 0; --k) a.pre.push_back(pick(rng));
    for (int k = small(rng); k > 0; --k) a.add.push_back(pick(rng));
    for (int k = small(rng) - 1; k > 0; --k) a.del.push_back(pick(rng));
    mgp::normalize_action(a);
    out.push_back(std::move(a));
  }
  return out;
}

inline mgp::State random_state(std::mt19937_64& rng, std::size_t props, double density = 0.4) {
  std::bernoulli_distribution coin(density);
  mgp::State s(props);
  for (mgp::PropId p = 0; p < props; ++p) {
    if (coin(rng)) s.insert(p);
  }
  return s;
}

}  // namespace oracle
