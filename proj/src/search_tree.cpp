#include "mgp/search_tree.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "mgp/budget.hpp"

namespace mgp {

SearchTree::SearchTree(double weight) : weight_(weight) {
  if (!(weight >= 1.0)) throw std::invalid_argument("heuristic weight must be >= 1");
}

NodeId SearchTree::reset(const State& root, HValue h, std::uint32_t iteration) {
  nodes_.clear();
  index_.clear();
  heap_ = {};
  open_count_ = 0;
  root_ = add(root, 0, h, kNoNode, kNoAction, iteration);
  return root_;
}

std::optional<NodeId> SearchTree::find(const State& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double SearchTree::f(NodeId id) const {
  const auto& n = nodes_[id];
  if (is_infinite(n.h)) return std::numeric_limits<double>::infinity();
  return static_cast<double>(n.g) + weight_ * static_cast<double>(n.h);
}

NodeId SearchTree::add(State state, std::int64_t g, HValue h, NodeId parent, ActionId via,
                       std::uint32_t iteration) {
  if (nodes_.size() >= node_limit_) throw ResourceExceeded(ResourceKind::memory);
  const auto id = static_cast<NodeId>(nodes_.size());
  auto [it, inserted] = index_.emplace(state, id);
  if (!inserted) throw std::logic_error("duplicate state inserted into search tree");
  SearchNode n;
  n.state = std::move(state);
  n.g = g;
  n.h = h;
  n.parent = parent;
  n.via = via;
  n.iteration = iteration;
  n.list = NodeList::closed;
  nodes_.push_back(std::move(n));
  if (!is_infinite(h)) open(id);
  return id;
}

void SearchTree::push_entry(NodeId id) {
  const auto& n = nodes_[id];
  heap_.push(OpenEntry{f(id), n.g, n.seq, id, n.version});
}

void SearchTree::open(NodeId id) {
  auto& n = nodes_[id];
  if (is_infinite(n.h)) {
    close(id);
    return;
  }
  if (n.list != NodeList::open) {
    n.list = NodeList::open;
    ++open_count_;
  }
  ++n.version;
  n.seq = next_seq_++;
  push_entry(id);
}

void SearchTree::close(NodeId id) {
  auto& n = nodes_[id];
  if (n.list == NodeList::open) {
    n.list = NodeList::closed;
    --open_count_;
  }
  ++n.version;
}

void SearchTree::set_path(NodeId id, std::int64_t g, NodeId parent, ActionId via) {
  auto& n = nodes_[id];
  n.g = g;
  n.parent = parent;
  n.via = via;
}

void SearchTree::set_heuristic(NodeId id, HValue h, std::uint32_t iteration) {
  auto& n = nodes_[id];
  n.h = h;
  n.iteration = iteration;
}

void SearchTree::drop_stale() {
  while (!heap_.empty()) {
    const auto& top = heap_.top();
    const auto& n = nodes_[top.id];
    if (n.list == NodeList::open && n.version == top.version) return;
    heap_.pop();
  }
}

NodeId SearchTree::select_min() {
  drop_stale();
  if (heap_.empty()) throw EmptyOpen();
  return heap_.top().id;
}

NodeId SearchTree::pop_min() {
  const NodeId id = select_min();
  heap_.pop();
  close(id);
  return id;
}

Plan SearchTree::extract_plan(NodeId id) const {
  Plan plan;
  for (NodeId cur = id; nodes_[cur].parent != kNoNode; cur = nodes_[cur].parent) {
    plan.push_back(nodes_[cur].via);
  }
  std::reverse(plan.begin(), plan.end());
  return plan;
}

std::optional<NodeId> SearchTree::contains_goal(const Goal& g, bool include_open) const {
  auto eligible = [&](NodeId id) {
    return include_open || nodes_[id].list == NodeList::closed;
  };
  if (g.complete()) {
    auto id = find(g.mask());
    if (id && eligible(*id)) return id;
    return std::nullopt;
  }
  auto best_in = [&](NodeList list) -> std::optional<NodeId> {
    std::optional<NodeId> best;
    for (NodeId id = 0; id < nodes_.size(); ++id) {
      const auto& n = nodes_[id];
      if (n.list != list || !goal_satisfied(n.state, g)) continue;
      if (!best || n.g < nodes_[*best].g || (n.g == nodes_[*best].g && n.seq < nodes_[*best].seq)) {
        best = id;
      }
    }
    return best;
  };
  if (auto hit = best_in(NodeList::closed)) return hit;
  if (include_open) return best_in(NodeList::open);
  return std::nullopt;
}

void SearchTree::delete_states_out_of_tree(const State& s) {
  const auto found = find(s);
  if (!found) throw StateNotInTree();
  const NodeId new_root = *found;
  if (new_root == root_) return;

  // children in CSR form, then a traversal from the new root
  const std::size_t n = nodes_.size();
  std::vector<std::uint32_t> offset(n + 1, 0);
  for (const auto& node : nodes_) {
    if (node.parent != kNoNode) ++offset[node.parent + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] += offset[i];
  std::vector<NodeId> children(offset[n]);
  std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
  for (NodeId id = 0; id < n; ++id) {
    const NodeId p = nodes_[id].parent;
    if (p != kNoNode) children[fill[p]++] = id;
  }
  std::vector<char> keep(n, 0);
  std::vector<NodeId> stack{new_root};
  keep[new_root] = 1;
  while (!stack.empty()) {
    const NodeId cur = stack.back();
    stack.pop_back();
    for (std::uint32_t k = offset[cur]; k < offset[cur + 1]; ++k) {
      const NodeId c = children[k];
      if (keep[c] == 0) {
        keep[c] = 1;
        stack.push_back(c);
      }
    }
  }

  std::vector<NodeId> remap(n, kNoNode);
  std::vector<SearchNode> kept;
  for (NodeId id = 0; id < n; ++id) {
    if (keep[id] == 0) continue;
    remap[id] = static_cast<NodeId>(kept.size());
    kept.push_back(std::move(nodes_[id]));
  }
  nodes_ = std::move(kept);
  index_.clear();
  index_.reserve(nodes_.size());
  open_count_ = 0;
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    auto& node = nodes_[id];
    node.parent = node.parent == kNoNode ? kNoNode : remap[node.parent];
    index_.emplace(node.state, id);
    if (node.list == NodeList::open) ++open_count_;
  }
  root_ = remap[new_root];
  nodes_[root_].parent = kNoNode;
  nodes_[root_].via = kNoAction;
  rebuild_heap();
}

void SearchTree::rebuild_heap() {
  heap_ = {};
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id].list == NodeList::open) push_entry(id);
  }
}

void SearchTree::update_search_tree(const State& s, const Goal& g, std::uint32_t iteration,
                                    HeuristicEvaluator& h) {
  for (auto& node : nodes_) {
    if (node.list == NodeList::open) {
      node.list = NodeList::closed;
      ++node.version;
    }
  }
  open_count_ = 0;
  heap_ = {};
  const auto id = find(s);
  if (!id) {
    reset(s, h(s, g), iteration);
    return;
  }
  set_heuristic(*id, h(s, g), iteration);
  open(*id);
}

std::size_t SearchTree::refresh_all(const Goal& g, std::uint32_t iteration, HeuristicEvaluator& h) {
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    auto& node = nodes_[id];
    node.h = h(node.state, g);
    node.iteration = iteration;
    ++node.version;
    if (node.list == NodeList::open && is_infinite(node.h)) {
      node.list = NodeList::closed;
      --open_count_;
    }
  }
  rebuild_heap();
  return nodes_.size();
}

void SearchTree::dump(std::ostream& out) const {
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    const auto& n = nodes_[id];
    out << id << ' ' << std::hex << n.state.hash() << std::dec << ' ' << n.g << ' ';
    if (is_infinite(n.h)) {
      out << "inf";
    } else {
      out << n.h;
    }
    out << ' ' << n.iteration << ' ';
    if (n.parent == kNoNode) {
      out << '-';
    } else {
      out << n.parent;
    }
    out << ' ' << (n.list == NodeList::open ? "open" : "closed") << '\n';
  }
}

}  // namespace mgp
