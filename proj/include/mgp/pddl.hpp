#pragma once

// Typed-STRIPS PDDL frontend: s-expression reader, domain/problem parsers and
// a grounder producing a GroundProblem.

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgp/strips.hpp"

namespace mgp::pddl {

enum class ErrorKind {
  syntax,
  unsupported_feature,
  unknown_predicate,
  unknown_object,
  unknown_type,
  type_mismatch,
  capacity_exceeded,
  io,
};

/// Every frontend error. what() is formatted as `file:line:col: message`.
class PddlError : public std::runtime_error {
 public:
  PddlError(ErrorKind kind, std::string file, int line, int col, const std::string& message);

  ErrorKind kind() const { return kind_; }
  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  ErrorKind kind_;
  std::string file_;
  int line_;
  int col_;
};

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct TypedName {
  std::string name;
  std::string type = "object";
};

/// Atom over variables (`?x`) and constants.
struct AtomTemplate {
  std::string predicate;
  std::vector<std::string> args;
  SourcePos pos;
};

struct PredicateDecl {
  std::string name;
  std::vector<TypedName> params;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> params;
  std::vector<AtomTemplate> pre;
  std::vector<AtomTemplate> add;
  std::vector<AtomTemplate> del;
};

struct Domain {
  std::string name;
  std::string file;
  std::vector<std::string> requirements;
  std::map<std::string, std::string> type_parent;  // type -> supertype
  std::vector<TypedName> constants;
  std::vector<PredicateDecl> predicates;
  std::vector<ActionSchema> actions;
  std::uint64_t checksum = 0;

  const PredicateDecl* find_predicate(std::string_view name) const;
  bool is_subtype(std::string_view type, std::string_view ancestor) const;
};

struct Problem {
  std::string name;
  std::string domain_name;
  std::string file;
  std::vector<TypedName> objects;
  std::vector<AtomTemplate> init;
  std::vector<AtomTemplate> goal;
  std::uint64_t checksum = 0;
};

Domain parse_domain(std::string_view text, std::string_view file = "<domain>");
Problem parse_problem(std::string_view text, const Domain& domain,
                      std::string_view file = "<problem>");

struct GroundingOptions {
  std::size_t max_actions = 2'000'000;
};

GroundProblem ground(const Domain& domain, const Problem& problem,
                     const GroundingOptions& options = {});

/// Reads, parses and grounds a domain/problem file pair.
GroundProblem load(const std::filesystem::path& domain_file,
                   const std::filesystem::path& problem_file,
                   const GroundingOptions& options = {});

std::uint64_t fnv1a(std::string_view text, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace mgp::pddl
