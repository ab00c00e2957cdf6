#pragma once

// Incremental search tree shared by every planner: OPEN/CLOSED bookkeeping,
// plan extraction, re-rooting and the conservative goal-change update.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "mgp/heuristics.hpp"
#include "mgp/strips.hpp"

namespace mgp {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

enum class NodeList : std::uint8_t { open, closed };

struct SearchNode {
  State state;
  std::int64_t g = 0;
  HValue h = 0;
  NodeId parent = kNoNode;
  ActionId via = kNoAction;   // action applied at the parent
  std::uint32_t iteration = 0;  // search episode whose goal h reflects
  std::uint64_t seq = 0;        // insertion order, for FIFO tie-breaking
  std::uint32_t version = 0;    // bumped whenever the OPEN key changes
  NodeList list = NodeList::open;
};

class EmptyOpen : public std::logic_error {
 public:
  EmptyOpen() : std::logic_error("select on empty OPEN list") {}
};

class StateNotInTree : public std::logic_error {
 public:
  StateNotInTree() : std::logic_error("state is not stored in the search tree") {}
};

class SearchTree {
 public:
  explicit SearchTree(double weight = 1.0);

  double weight() const { return weight_; }
  void set_node_limit(std::size_t limit) { node_limit_ = limit; }

  /// Drops everything and stores `root` as the single OPEN node (g = 0).
  NodeId reset(const State& root, HValue h, std::uint32_t iteration);

  std::size_t size() const { return nodes_.size(); }
  std::size_t open_size() const { return open_count_; }
  std::size_t closed_size() const { return nodes_.size() - open_count_; }
  bool open_empty() const { return open_count_ == 0; }
  NodeId root() const { return root_; }

  const SearchNode& node(NodeId id) const { return nodes_[id]; }
  std::optional<NodeId> find(const State& s) const;

  /// f = g + w * h; +inf for dead ends.
  double f(NodeId id) const;

  /// Stores a new node in OPEN. Dead ends (h infinite) go straight to CLOSED
  /// and are never selected.
  NodeId add(State state, std::int64_t g, HValue h, NodeId parent, ActionId via,
             std::uint32_t iteration);

  /// Moves or re-queues a node into OPEN with its current key.
  void open(NodeId id);
  void close(NodeId id);
  void set_path(NodeId id, std::int64_t g, NodeId parent, ActionId via);
  void set_heuristic(NodeId id, HValue h, std::uint32_t iteration);

  /// argmin f over OPEN; ties prefer larger g, then earlier insertion.
  NodeId select_min();
  /// select_min followed by removal from OPEN (the node stays stored).
  NodeId pop_min();

  /// Actions along root -> node, in execution order.
  Plan extract_plan(NodeId id) const;

  /// A stored node satisfying g: CLOSED first, then (optionally) OPEN; the
  /// lowest g wins, ties by insertion order. A complete goal is a single
  /// identity lookup.
  std::optional<NodeId> contains_goal(const Goal& g, bool include_open = true) const;

  /// Re-roots the tree at s and discards everything outside s's subtree.
  /// g-values are kept as they are.
  void delete_states_out_of_tree(const State& s);

  /// Conservative update after a goal change: former OPEN nodes move to
  /// CLOSED with their stale h, OPEN becomes exactly the node for s with a
  /// fresh h stamped with `iteration`. One heuristic call.
  void update_search_tree(const State& s, const Goal& g, std::uint32_t iteration,
                          HeuristicEvaluator& h);

  /// Re-evaluates h for every stored node against g (the GFRA*-style refresh)
  /// and rebuilds OPEN priorities. Returns the number of evaluations.
  std::size_t refresh_all(const Goal& g, std::uint32_t iteration, HeuristicEvaluator& h);

  /// Line-oriented dump: id state-hash g h iteration parent list.
  void dump(std::ostream& out) const;

 private:
  struct OpenEntry {
    double f;
    std::int64_t g;
    std::uint64_t seq;
    NodeId id;
    std::uint32_t version;
  };
  struct EntryAfter {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
      if (a.f != b.f) return a.f > b.f;
      if (a.g != b.g) return a.g < b.g;
      return a.seq > b.seq;
    }
  };

  void push_entry(NodeId id);
  void rebuild_heap();
  void drop_stale();

  double weight_;
  std::size_t node_limit_ = static_cast<std::size_t>(-1);
  std::vector<SearchNode> nodes_;
  std::unordered_map<State, NodeId, StateHash> index_;
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, EntryAfter> heap_;
  std::size_t open_count_ = 0;
  std::uint64_t next_seq_ = 0;
  NodeId root_ = kNoNode;
};

}  // namespace mgp
