#include "mgp/strips.hpp"

#include <algorithm>
#include <bit>

namespace mgp {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

void sort_unique(std::vector<PropId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

State::State(std::size_t universe)
    : universe_(static_cast<std::uint32_t>(universe)), words_(word_count(universe), 0) {}

State::State(std::size_t universe, std::span<const PropId> props) : State(universe) {
  for (PropId p : props) insert(p);
}

std::size_t State::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

void State::insert(PropId p) {
  if (p >= universe_) throw std::out_of_range("proposition id outside universe");
  words_[p >> 6] |= std::uint64_t{1} << (p & 63);
}

void State::erase(PropId p) {
  if (p >= universe_) throw std::out_of_range("proposition id outside universe");
  words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
}

bool State::is_subset_of(const State& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<PropId> State::ids() const {
  std::vector<PropId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<PropId>(i * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t State::hash() const {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

Goal Goal::partial(std::size_t universe, std::span<const PropId> props) {
  Goal g;
  g.mask_ = State(universe, props);
  g.props_ = g.mask_.ids();
  g.complete_ = false;
  return g;
}

Goal Goal::complete_state(const State& state) {
  Goal g;
  g.mask_ = state;
  g.props_ = state.ids();
  g.complete_ = true;
  return g;
}

NotApplicable::NotApplicable(std::string action, std::optional<std::size_t> step)
    : std::runtime_error("action not applicable: " + action +
                         (step ? " (plan step " + std::to_string(*step) + ")" : "")),
      action_(std::move(action)),
      step_(step) {}

bool applicable(const State& s, const GroundAction& a) {
  return std::all_of(a.pre.begin(), a.pre.end(), [&](PropId p) { return s.contains(p); });
}

State apply(const State& s, const GroundAction& a) {
  if (!applicable(s, a)) throw NotApplicable(a.name, std::nullopt);
  State next = s;
  for (PropId p : a.del) next.erase(p);
  for (PropId p : a.add) next.insert(p);
  return next;
}

State apply_sequence(const State& s, std::span<const ActionId> plan,
                     std::span<const GroundAction> actions) {
  State cur = s;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto& a = actions[plan[i]];
    if (!applicable(cur, a)) throw NotApplicable(a.name, i);
    cur = apply(cur, a);
  }
  return cur;
}

bool goal_satisfied(const State& s, const Goal& g) {
  return g.complete() ? s == g.mask() : g.mask().is_subset_of(s);
}

bool validate_plan(const State& s0, std::span<const ActionId> plan, const Goal& g,
                   std::span<const GroundAction> actions) {
  State cur = s0;
  for (ActionId id : plan) {
    if (id >= actions.size() || !applicable(cur, actions[id])) return false;
    cur = apply(cur, actions[id]);
  }
  return goal_satisfied(cur, g);
}

bool normalize_action(GroundAction& a) {
  sort_unique(a.pre);
  sort_unique(a.add);
  sort_unique(a.del);
  std::vector<PropId> kept;
  std::set_difference(a.del.begin(), a.del.end(), a.add.begin(), a.add.end(),
                      std::back_inserter(kept));
  const bool overlap = kept.size() != a.del.size();
  a.del = std::move(kept);
  return overlap;
}

std::string GroundProblem::describe(const State& s) const {
  std::string out = "{";
  bool first = true;
  for (PropId p : s.ids()) {
    if (!first) out += ' ';
    first = false;
    out += p < propositions.size() ? propositions[p] : std::to_string(p);
  }
  out += '}';
  return out;
}

}  // namespace mgp
