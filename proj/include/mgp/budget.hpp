#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string_view>

namespace mgp {

enum class ResourceKind { time, memory, expansions };

std::string_view to_string(ResourceKind kind);

/// Raised when a run exceeds its CPU, node or expansion allowance. Distinct
/// from search failure (an exhausted OPEN list).
class ResourceExceeded : public std::runtime_error {
 public:
  explicit ResourceExceeded(ResourceKind kind);
  ResourceKind kind() const { return kind_; }

 private:
  ResourceKind kind_;
};

/// CPU time consumed by the calling thread, in seconds.
double thread_cpu_seconds();

struct Budgets {
  double cpu_seconds = 60.0;           // <= 0 disables the time limit
  std::size_t max_nodes = 0;           // 0 derives a cap from memory_bytes
  std::uint64_t max_expansions = 0;    // 0 = unlimited
  std::size_t memory_bytes = std::size_t{4} << 30;
};

/// Per-run resource accounting. Time is measured as thread CPU time so that
/// runs executed on worker threads are charged only for their own work.
class Budget {
 public:
  Budget() : Budget(Budgets{0.0, std::numeric_limits<std::size_t>::max(), 0, 0}) {}
  explicit Budget(const Budgets& limits);

  void restart();
  double elapsed_seconds() const;
  double limit_seconds() const { return cpu_seconds_; }
  std::size_t max_nodes() const { return max_nodes_; }

  /// Called once per expansion; polls the clock every few calls.
  void on_expansion();
  /// Unconditional clock check.
  void check_time() const;
  void check_nodes(std::size_t stored) const {
    if (stored > max_nodes_) throw ResourceExceeded(ResourceKind::memory);
  }

 private:
  double cpu_seconds_;
  std::uint64_t max_expansions_;
  std::size_t max_nodes_;
  double start_ = 0.0;
  std::uint64_t expansions_ = 0;
};

/// Nodes that fit in `memory_bytes` given the per-node footprint for a
/// universe of `universe` propositions.
std::size_t node_cap_for_memory(std::size_t memory_bytes, std::size_t universe);

}  // namespace mgp
