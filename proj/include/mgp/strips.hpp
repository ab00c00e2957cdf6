#pragma once

// STRIPS model: propositions, states, ground actions and the transition
// function s' = (s - del(a)) U add(a).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgp {

using PropId = std::uint32_t;
using ActionId = std::uint32_t;

inline constexpr ActionId kNoAction = static_cast<ActionId>(-1);

/// A set of proposition ids over a fixed universe, stored as a bit vector.
/// Equality and hashing are exact, which is what duplicate detection in the
/// search tree relies on.
class State {
 public:
  State() = default;
  explicit State(std::size_t universe);
  State(std::size_t universe, std::span<const PropId> props);

  std::size_t universe() const { return universe_; }
  bool contains(PropId p) const {
    return p < universe_ && ((words_[p >> 6] >> (p & 63)) & 1U) != 0;
  }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  // Builders. States are treated as values; these are only used while
  // constructing a new state.
  void insert(PropId p);
  void erase(PropId p);

  bool is_subset_of(const State& other) const;
  std::vector<PropId> ids() const;
  std::size_t hash() const;

  friend bool operator==(const State& a, const State& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::uint32_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StateHash {
  std::size_t operator()(const State& s) const { return s.hash(); }
};

/// Goal condition. A partial goal is the usual conjunction of positive
/// literals; a complete goal is a full world state (what the goal simulator
/// evolves).
class Goal {
 public:
  Goal() = default;
  static Goal partial(std::size_t universe, std::span<const PropId> props);
  static Goal complete_state(const State& state);

  bool complete() const { return complete_; }
  const std::vector<PropId>& props() const { return props_; }
  const State& mask() const { return mask_; }
  std::size_t universe() const { return mask_.universe(); }

  friend bool operator==(const Goal& a, const Goal& b) {
    return a.complete_ == b.complete_ && a.mask_ == b.mask_;
  }

 private:
  std::vector<PropId> props_;
  State mask_;
  bool complete_ = false;
};

struct GroundAction {
  std::string name;
  std::vector<PropId> pre;  // sorted, unique
  std::vector<PropId> add;  // sorted, unique, disjoint from del
  std::vector<PropId> del;  // sorted, unique
  int cost = 1;
};

using Plan = std::vector<ActionId>;

class NotApplicable : public std::runtime_error {
 public:
  NotApplicable(std::string action, std::optional<std::size_t> step);
  const std::string& action() const { return action_; }
  /// Position of the failing action inside a plan, when applying a sequence.
  std::optional<std::size_t> step() const { return step_; }

 private:
  std::string action_;
  std::optional<std::size_t> step_;
};

bool applicable(const State& s, const GroundAction& a);

/// Throws NotApplicable when pre(a) is not a subset of s.
State apply(const State& s, const GroundAction& a);

/// Left fold of apply over the plan. The failing index is reported in the
/// exception.
State apply_sequence(const State& s, std::span<const ActionId> plan,
                     std::span<const GroundAction> actions);

bool goal_satisfied(const State& s, const Goal& g);

bool validate_plan(const State& s0, std::span<const ActionId> plan, const Goal& g,
                   std::span<const GroundAction> actions);

/// Sorts and deduplicates the sets, removes add/del overlap in favour of add.
/// Returns true if an overlap was found.
bool normalize_action(GroundAction& a);

/// Fully grounded planning task (A, s0, g0) plus naming metadata.
struct GroundProblem {
  std::string domain_name;
  std::string problem_name;
  std::vector<std::string> propositions;  // id -> "(pred arg ...)"
  std::vector<std::string> objects;
  std::vector<GroundAction> actions;
  State init;
  Goal goal;
  std::vector<std::string> warnings;
  std::uint64_t source_checksum = 0;  // FNV-1a over domain + problem text

  std::size_t universe() const { return propositions.size(); }
  std::string describe(const State& s) const;
};

}  // namespace mgp
