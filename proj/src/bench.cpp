#include "mgp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <mutex>
#include <thread>

#include "mgp/baselines.hpp"
#include "mgp/controller.hpp"

namespace mgp {

std::string_view to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::sastar: return "sastar";
    case Algorithm::gfra: return "gfra";
    case Algorithm::mgp: return "mgp";
    case Algorithm::mgp_oc: return "mgp-oc";
    case Algorithm::mgp_pf: return "mgp-pf";
    case Algorithm::mgp_ocpf: return "mgp-ocpf";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : all_algorithms()) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> algs = {Algorithm::sastar, Algorithm::gfra,
                                              Algorithm::mgp,    Algorithm::mgp_oc,
                                              Algorithm::mgp_pf, Algorithm::mgp_ocpf};
  return algs;
}

AgentTrace run_algorithm(Algorithm alg, const GroundProblem& problem, const MgpConfig& config,
                         GoalEnvironment& env) {
  switch (alg) {
    case Algorithm::sastar: return run_sastar(problem, config, env);
    case Algorithm::gfra: return run_gfra(problem, config, env);
    default: return run_mgp(problem, config, env);
  }
}

MgpConfig make_config(const CellParams& params) {
  MgpConfig cfg;
  cfg.weight = params.weight;
  cfg.delay_coefficient = params.delay_coefficient;
  cfg.heuristic = params.heuristic;
  cfg.budgets = params.budgets;
  cfg.open_check = params.algorithm == Algorithm::mgp_oc || params.algorithm == Algorithm::mgp_ocpf;
  cfg.plan_follow = params.algorithm == Algorithm::mgp_pf || params.algorithm == Algorithm::mgp_ocpf;
  if (params.algorithm == Algorithm::gfra) cfg.weight = params.gfra_weight.value_or(1.0);
  return cfg;
}

ExperimentRecord make_record(const GroundProblem& problem, const CellParams& params,
                             std::uint64_t run_id, std::uint64_t seed, const AgentTrace& trace,
                             bool zero_timing) {
  ExperimentRecord r;
  r.domain = problem.domain_name;
  r.problem = problem.problem_name;
  r.algorithm = std::string(to_string(params.algorithm));
  r.w = make_config(params).weight;
  r.c = params.delay_coefficient;
  r.g_r = params.goal_rate;
  r.run_id = run_id;
  r.seed = seed;
  RunStatus status = trace.status;
  // a success that overshot the clock between polls still counts as over budget
  const double limit = params.budgets.cpu_seconds;
  if (status == RunStatus::success && limit > 0.0 && trace.cpu_seconds > limit) {
    status = RunStatus::budget;
  }
  r.status = std::string(to_string(status));
  r.cpu_time_ms = zero_timing ? 0.0 : std::round(trace.cpu_seconds * 1e6) / 1e3;
  r.executed_actions = trace.executed.size();
  r.search_episodes = trace.episodes.size();
  r.expansions = trace.expansions;
  r.heuristic_calls = trace.heuristic_calls;
  r.goal_changes = trace.goal_changes;
  return r;
}

std::vector<ExperimentRecord> run_cell(const GroundProblem& problem, const CellParams& params,
                                       const CellOptions& options) {
  const std::size_t n = options.repetitions;
  std::vector<ExperimentRecord> records(n);
  const MgpConfig cfg = make_config(params);

  auto one = [&](std::size_t k) {
    const std::uint64_t seed = options.seed_base + k;
    GoalEnvironment env(GoalDynamicsConfig{params.goal_rate, seed, params.goal_evolution},
                        problem.actions);
    AgentTrace trace = run_algorithm(params.algorithm, problem, cfg, env);
    std::string why;
    if (!replay_trace(problem, trace, &why)) {
      throw InternalError("replay audit failed (" + std::string(to_string(params.algorithm)) +
                          ", seed " + std::to_string(seed) + "): " + why);
    }
    if (options.trace_dir) {
      std::ostringstream name;
      name << problem.problem_name << '_' << to_string(params.algorithm) << "_w"
           << format_number(cfg.weight) << "_c" << format_number(params.delay_coefficient)
           << "_gr" << params.goal_rate << "_run" << k << ".trace";
      std::ofstream out(*options.trace_dir / name.str());
      write_trace(out, trace, problem);
    }
    records[k] = make_record(problem, params, k, seed, trace, options.zero_timing);
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1 || n <= 1) {
    for (std::size_t k = 0; k < n; ++k) one(k);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < std::min<std::size_t>(jobs, n); ++j) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) {
        try {
          one(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return records;
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records, bool header) {
  if (header) out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.domain << ',' << r.problem << ',' << r.algorithm << ',' << format_number(r.w) << ','
        << format_number(r.c) << ',' << r.g_r << ',' << r.run_id << ',' << r.seed << ','
        << r.status << ',' << format_number(r.cpu_time_ms) << ',' << r.executed_actions << ','
        << r.search_episodes << ',' << r.expansions << ',' << r.heuristic_calls << ','
        << r.goal_changes << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

template <typename T>
T parse_field(const std::string& s, std::size_t line, const char* what) {
  T v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad " + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::runtime_error("csv: header does not match the record schema");
  std::vector<ExperimentRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto f = split(line);
    if (f.size() != 15) {
      throw std::runtime_error("csv line " + std::to_string(lineno) + ": expected 15 fields");
    }
    ExperimentRecord r;
    r.domain = f[0];
    r.problem = f[1];
    r.algorithm = f[2];
    r.w = parse_field<double>(f[3], lineno, "w");
    r.c = parse_field<double>(f[4], lineno, "c");
    r.g_r = parse_field<std::uint32_t>(f[5], lineno, "g_r");
    r.run_id = parse_field<std::uint64_t>(f[6], lineno, "run_id");
    r.seed = parse_field<std::uint64_t>(f[7], lineno, "seed");
    r.status = f[8];
    if (r.status != "success" && r.status != "failure" && r.status != "budget") {
      throw std::runtime_error("csv line " + std::to_string(lineno) + ": bad status");
    }
    r.cpu_time_ms = parse_field<double>(f[9], lineno, "cpu_time_ms");
    r.executed_actions = parse_field<std::uint64_t>(f[10], lineno, "executed_actions");
    r.search_episodes = parse_field<std::uint64_t>(f[11], lineno, "search_episodes");
    r.expansions = parse_field<std::uint64_t>(f[12], lineno, "expansions");
    r.heuristic_calls = parse_field<std::uint64_t>(f[13], lineno, "heuristic_calls");
    r.goal_changes = parse_field<std::uint64_t>(f[14], lineno, "goal_changes");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CellSummary> aggregate(const std::vector<ExperimentRecord>& records) {
  std::vector<CellSummary> cells;
  std::vector<std::vector<const ExperimentRecord*>> members;
  for (const auto& r : records) {
    auto it = std::find_if(cells.begin(), cells.end(), [&](const CellSummary& c) {
      return c.domain == r.domain && c.problem == r.problem && c.algorithm == r.algorithm &&
             c.w == r.w && c.c == r.c && c.g_r == r.g_r;
    });
    if (it == cells.end()) {
      CellSummary c;
      c.domain = r.domain;
      c.problem = r.problem;
      c.algorithm = r.algorithm;
      c.w = r.w;
      c.c = r.c;
      c.g_r = r.g_r;
      cells.push_back(std::move(c));
      members.emplace_back();
      it = cells.end() - 1;
    }
    members[static_cast<std::size_t>(it - cells.begin())].push_back(&r);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& cell = cells[i];
    std::vector<double> times;
    double length_sum = 0.0;
    cell.runs = members[i].size();
    for (const auto* r : members[i]) {
      if (r->status != "success") continue;
      times.push_back(r->cpu_time_ms);
      length_sum += static_cast<double>(r->executed_actions);
    }
    cell.successes = times.size();
    cell.success_rate =
        cell.runs == 0 ? 0.0 : static_cast<double>(cell.successes) / static_cast<double>(cell.runs);
    if (times.empty()) continue;
    double sum = 0.0;
    for (double t : times) sum += t;
    cell.mean_cpu_ms = sum / static_cast<double>(times.size());
    std::sort(times.begin(), times.end());
    const std::size_t m = times.size();
    cell.median_cpu_ms = m % 2 == 1 ? times[m / 2] : (times[m / 2 - 1] + times[m / 2]) / 2.0;
    cell.mean_executed_actions = length_sum / static_cast<double>(m);
  }
  return cells;
}

void write_summary(std::ostream& out, const std::vector<CellSummary>& cells) {
  auto opt = [](const std::optional<double>& v) {
    if (!v) return std::string("-");
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << *v;
    return s.str();
  };
  out << std::left << std::setw(14) << "problem" << std::setw(10) << "alg" << std::setw(6) << "w"
      << std::setw(6) << "c" << std::setw(6) << "g_r" << std::right << std::setw(6) << "runs"
      << std::setw(9) << "success" << std::setw(12) << "mean_ms" << std::setw(12) << "median_ms"
      << std::setw(10) << "length" << '\n';
  for (const auto& c : cells) {
    out << std::left << std::setw(14) << c.problem << std::setw(10) << c.algorithm << std::setw(6)
        << format_number(c.w) << std::setw(6) << format_number(c.c) << std::setw(6) << c.g_r
        << std::right << std::setw(6) << c.runs << std::setw(8) << std::fixed
        << std::setprecision(0) << c.success_rate * 100.0 << '%' << std::setw(12)
        << opt(c.mean_cpu_ms) << std::setw(12) << opt(c.median_cpu_ms) << std::setw(10)
        << opt(c.mean_executed_actions) << '\n';
  }
}

}  // namespace mgp
