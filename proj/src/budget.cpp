#include "mgp/budget.hpp"

#include <ctime>
#include <string>

namespace mgp {

std::string_view to_string(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::time: return "time";
    case ResourceKind::memory: return "memory";
    case ResourceKind::expansions: return "expansions";
  }
  return "?";
}

ResourceExceeded::ResourceExceeded(ResourceKind kind)
    : std::runtime_error("resource exceeded: " + std::string(to_string(kind))), kind_(kind) {}

double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

std::size_t node_cap_for_memory(std::size_t memory_bytes, std::size_t universe) {
  // node record + state words (stored twice: node and index key) + index and
  // heap overhead
  const std::size_t words = (universe + 63) / 64;
  const std::size_t per_node = 64 + 2 * (32 + words * 8) + 64 + 40;
  return memory_bytes / per_node;
}

Budget::Budget(const Budgets& limits)
    : cpu_seconds_(limits.cpu_seconds),
      max_expansions_(limits.max_expansions),
      max_nodes_(limits.max_nodes != 0 ? limits.max_nodes
                                       : std::numeric_limits<std::size_t>::max()) {
  restart();
}

void Budget::restart() {
  start_ = thread_cpu_seconds();
  expansions_ = 0;
}

double Budget::elapsed_seconds() const { return thread_cpu_seconds() - start_; }

void Budget::on_expansion() {
  ++expansions_;
  if (max_expansions_ != 0 && expansions_ > max_expansions_) {
    throw ResourceExceeded(ResourceKind::expansions);
  }
  if ((expansions_ & 63) == 0) check_time();
}

void Budget::check_time() const {
  if (cpu_seconds_ > 0.0 && elapsed_seconds() > cpu_seconds_) {
    throw ResourceExceeded(ResourceKind::time);
  }
}

}  // namespace mgp
