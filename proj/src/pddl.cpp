#include "mgp/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace mgp::pddl {

PddlError::PddlError(ErrorKind kind, std::string file, int line, int col,
                     const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                         message),
      kind_(kind),
      file_(std::move(file)),
      line_(line),
      col_(col) {}

std::uint64_t fnv1a(std::string_view text, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  SourcePos pos;

  bool is_atom(std::string_view s) const { return !is_list && atom == s; }
};

class Reader {
 public:
  Reader(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  SExpr read_document() {
    skip_blank();
    if (at_end()) fail(ErrorKind::syntax, here(), "empty input");
    SExpr doc = read();
    skip_blank();
    if (!at_end()) fail(ErrorKind::syntax, here(), "unexpected text after top-level expression");
    return doc;
  }

  [[noreturn]] void fail(ErrorKind kind, SourcePos pos, const std::string& msg) const {
    throw PddlError(kind, file_, pos.line, pos.col, msg);
  }

  const std::string& file() const { return file_; }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  SourcePos here() const { return {line_, col_}; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_blank() {
    while (!at_end()) {
      const char c = text_[i_];
      if (c == ';') {
        while (!at_end() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else {
        return;
      }
    }
  }

  SExpr read() {
    skip_blank();
    if (at_end()) fail(ErrorKind::syntax, here(), "unexpected end of input");
    SExpr e;
    e.pos = here();
    const char c = text_[i_];
    if (c == ')') fail(ErrorKind::syntax, here(), "unexpected ')'");
    if (c == '(') {
      e.is_list = true;
      advance();
      for (;;) {
        skip_blank();
        if (at_end()) fail(ErrorKind::syntax, e.pos, "unbalanced '(' (missing ')')");
        if (text_[i_] == ')') {
          advance();
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    while (!at_end()) {
      const char d = text_[i_];
      if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d)) != 0) {
        break;
      }
      e.atom.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(d))));
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::string file_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string, std::less<>> kAcceptedRequirements = {":strips", ":typing",
                                                                  ":equality"};

bool is_variable(std::string_view s) { return !s.empty() && s.front() == '?'; }

class DomainParser {
 public:
  DomainParser(Reader& reader, Domain& out) : r_(reader), d_(out) {}

  void parse(const SExpr& doc) {
    expect_define(doc);
    const SExpr& header = doc.items[1];
    if (!header.is_list || header.items.size() != 2 || !header.items[0].is_atom("domain") ||
        header.items[1].is_list) {
      r_.fail(ErrorKind::syntax, header.pos, "expected (domain <name>)");
    }
    d_.name = header.items[1].atom;
    for (std::size_t i = 2; i < doc.items.size(); ++i) section(doc.items[i]);
    for (auto& a : d_.actions) check_action(a);
  }

 private:
  void expect_define(const SExpr& doc) {
    if (!doc.is_list || doc.items.size() < 2 || !doc.items[0].is_atom("define")) {
      r_.fail(ErrorKind::syntax, doc.pos, "expected (define ...)");
    }
  }

  void section(const SExpr& s) {
    if (!s.is_list || s.items.empty() || s.items[0].is_list) {
      r_.fail(ErrorKind::syntax, s.pos, "expected a domain section");
    }
    const std::string& key = s.items[0].atom;
    if (key == ":requirements") {
      for (std::size_t i = 1; i < s.items.size(); ++i) {
        const auto& req = s.items[i];
        if (req.is_list) r_.fail(ErrorKind::syntax, req.pos, "malformed requirement");
        if (!kAcceptedRequirements.contains(req.atom)) {
          r_.fail(ErrorKind::unsupported_feature, req.pos,
                  "unsupported requirement " + req.atom);
        }
        d_.requirements.push_back(req.atom);
      }
    } else if (key == ":types") {
      for (auto& t : typed_list(s, 1, false)) {
        if (t.name == "object") continue;
        d_.type_parent[t.name] = t.type;
      }
      for (auto& [name, parent] : d_.type_parent) {
        if (parent != "object" && !d_.type_parent.contains(parent)) {
          r_.fail(ErrorKind::unknown_type, s.pos, "unknown supertype " + parent);
        }
      }
    } else if (key == ":constants") {
      for (auto& c : typed_list(s, 1, true)) d_.constants.push_back(c);
    } else if (key == ":predicates") {
      for (std::size_t i = 1; i < s.items.size(); ++i) {
        const auto& p = s.items[i];
        if (!p.is_list || p.items.empty() || p.items[0].is_list) {
          r_.fail(ErrorKind::syntax, p.pos, "malformed predicate declaration");
        }
        PredicateDecl decl;
        decl.name = p.items[0].atom;
        decl.params = typed_list(p, 1, true);
        d_.predicates.push_back(std::move(decl));
      }
    } else if (key == ":action") {
      action(s);
    } else if (key == ":functions") {
      r_.fail(ErrorKind::unsupported_feature, s.pos, "unsupported feature :functions");
    } else if (key == ":derived" || key == ":durative-action" || key == ":axiom") {
      r_.fail(ErrorKind::unsupported_feature, s.pos, "unsupported feature " + key);
    } else {
      r_.fail(ErrorKind::syntax, s.pos, "unknown domain section " + key);
    }
  }

  std::vector<TypedName> typed_list(const SExpr& list, std::size_t from, bool check_types) {
    std::vector<TypedName> out;
    std::size_t pending = 0;
    for (std::size_t i = from; i < list.items.size(); ++i) {
      const auto& item = list.items[i];
      if (item.is_list) {
        if (!item.items.empty() && item.items[0].is_atom("either")) {
          r_.fail(ErrorKind::unsupported_feature, item.pos, "unsupported feature either-types");
        }
        r_.fail(ErrorKind::syntax, item.pos, "unexpected list in typed list");
      }
      if (item.atom == "-") {
        if (i + 1 >= list.items.size()) r_.fail(ErrorKind::syntax, item.pos, "missing type after '-'");
        const auto& type = list.items[i + 1];
        if (type.is_list) {
          if (!type.items.empty() && type.items[0].is_atom("either")) {
            r_.fail(ErrorKind::unsupported_feature, type.pos, "unsupported feature either-types");
          }
          r_.fail(ErrorKind::syntax, type.pos, "malformed type");
        }
        if (check_types && type.atom != "object" && !d_.type_parent.contains(type.atom)) {
          r_.fail(ErrorKind::unknown_type, type.pos, "unknown type " + type.atom);
        }
        for (std::size_t k = out.size() - pending; k < out.size(); ++k) out[k].type = type.atom;
        pending = 0;
        ++i;
        continue;
      }
      out.push_back({item.atom, "object"});
      ++pending;
    }
    return out;
  }

  void action(const SExpr& s) {
    if (s.items.size() < 2 || s.items[1].is_list) r_.fail(ErrorKind::syntax, s.pos, "missing action name");
    ActionSchema a;
    a.name = s.items[1].atom;
    for (std::size_t i = 2; i < s.items.size(); i += 2) {
      const auto& key = s.items[i];
      if (key.is_list || i + 1 >= s.items.size()) {
        r_.fail(ErrorKind::syntax, key.pos, "malformed action body");
      }
      const auto& val = s.items[i + 1];
      if (key.atom == ":parameters") {
        if (!val.is_list) r_.fail(ErrorKind::syntax, val.pos, "expected parameter list");
        a.params = typed_list(val, 0, true);
      } else if (key.atom == ":precondition") {
        condition(val, a.pre);
      } else if (key.atom == ":effect") {
        effect(val, a);
      } else {
        r_.fail(ErrorKind::syntax, key.pos, "unknown action keyword " + key.atom);
      }
    }
    d_.actions.push_back(std::move(a));
  }

  AtomTemplate atom(const SExpr& e) {
    if (!e.is_list || e.items.empty() || e.items[0].is_list) {
      r_.fail(ErrorKind::syntax, e.pos, "expected an atom");
    }
    AtomTemplate t;
    t.predicate = e.items[0].atom;
    t.pos = e.pos;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      if (e.items[i].is_list) r_.fail(ErrorKind::syntax, e.items[i].pos, "nested term in atom");
      t.args.push_back(e.items[i].atom);
    }
    return t;
  }

  void condition(const SExpr& e, std::vector<AtomTemplate>& out) {
    if (!e.is_list) r_.fail(ErrorKind::syntax, e.pos, "expected a condition");
    if (e.items.empty()) return;
    if (e.items[0].is_list) r_.fail(ErrorKind::syntax, e.pos, "malformed condition");
    const std::string& head = e.items[0].atom;
    if (head == "and") {
      for (std::size_t i = 1; i < e.items.size(); ++i) condition(e.items[i], out);
    } else if (head == "not") {
      r_.fail(ErrorKind::unsupported_feature, e.pos, "unsupported feature negative-preconditions");
    } else if (head == "=") {
      r_.fail(ErrorKind::unsupported_feature, e.pos, "unsupported feature equality");
    } else if (head == "or" || head == "imply" || head == "exists" || head == "forall") {
      r_.fail(ErrorKind::unsupported_feature, e.pos, "unsupported feature " + head);
    } else {
      out.push_back(atom(e));
    }
  }

  void effect(const SExpr& e, ActionSchema& a) {
    if (!e.is_list) r_.fail(ErrorKind::syntax, e.pos, "expected an effect");
    if (e.items.empty()) return;
    if (e.items[0].is_list) r_.fail(ErrorKind::syntax, e.pos, "malformed effect");
    const std::string& head = e.items[0].atom;
    if (head == "and") {
      for (std::size_t i = 1; i < e.items.size(); ++i) effect(e.items[i], a);
    } else if (head == "not") {
      if (e.items.size() != 2) r_.fail(ErrorKind::syntax, e.pos, "malformed negative effect");
      a.del.push_back(atom(e.items[1]));
    } else if (head == "when") {
      r_.fail(ErrorKind::unsupported_feature, e.pos, "unsupported feature conditional-effects");
    } else if (head == "forall" || head == "increase" || head == "decrease" || head == "assign") {
      r_.fail(ErrorKind::unsupported_feature, e.pos, "unsupported feature " + head);
    } else {
      a.add.push_back(atom(e));
    }
  }

  void check_action(const ActionSchema& a) {
    std::unordered_set<std::string> vars;
    for (auto& p : a.params) {
      if (!is_variable(p.name)) {
        r_.fail(ErrorKind::syntax, {}, "parameter " + p.name + " of " + a.name + " is not a variable");
      }
      vars.insert(p.name);
    }
    auto check = [&](const AtomTemplate& t) {
      const PredicateDecl* decl = d_.find_predicate(t.predicate);
      if (decl == nullptr) r_.fail(ErrorKind::unknown_predicate, t.pos, "unknown predicate " + t.predicate);
      if (decl->params.size() != t.args.size()) {
        r_.fail(ErrorKind::syntax, t.pos, "wrong arity for " + t.predicate);
      }
      for (auto& arg : t.args) {
        if (is_variable(arg)) {
          if (!vars.contains(arg)) {
            r_.fail(ErrorKind::unknown_object, t.pos, "undeclared variable " + arg + " in " + a.name);
          }
        } else if (std::none_of(d_.constants.begin(), d_.constants.end(),
                                [&](const TypedName& c) { return c.name == arg; })) {
          r_.fail(ErrorKind::unknown_object, t.pos, "unknown constant " + arg);
        }
      }
    };
    for (auto& t : a.pre) check(t);
    for (auto& t : a.add) check(t);
    for (auto& t : a.del) check(t);
  }

  Reader& r_;
  Domain& d_;
};

class ProblemParser {
 public:
  ProblemParser(Reader& reader, const Domain& domain, Problem& out)
      : r_(reader), d_(domain), p_(out) {}

  void parse(const SExpr& doc) {
    if (!doc.is_list || doc.items.size() < 2 || !doc.items[0].is_atom("define")) {
      r_.fail(ErrorKind::syntax, doc.pos, "expected (define ...)");
    }
    const SExpr& header = doc.items[1];
    if (!header.is_list || header.items.size() != 2 || !header.items[0].is_atom("problem") ||
        header.items[1].is_list) {
      r_.fail(ErrorKind::syntax, header.pos, "expected (problem <name>)");
    }
    p_.name = header.items[1].atom;
    for (auto& c : d_.constants) known_[c.name] = c.type;
    bool have_goal = false;
    for (std::size_t i = 2; i < doc.items.size(); ++i) {
      const auto& s = doc.items[i];
      if (!s.is_list || s.items.empty() || s.items[0].is_list) {
        r_.fail(ErrorKind::syntax, s.pos, "expected a problem section");
      }
      const std::string& key = s.items[0].atom;
      if (key == ":domain") {
        if (s.items.size() != 2 || s.items[1].is_list) r_.fail(ErrorKind::syntax, s.pos, "malformed :domain");
        p_.domain_name = s.items[1].atom;
      } else if (key == ":requirements") {
        // already enforced at the domain level
      } else if (key == ":objects") {
        objects(s);
      } else if (key == ":init") {
        for (std::size_t k = 1; k < s.items.size(); ++k) p_.init.push_back(ground_atom(s.items[k]));
      } else if (key == ":goal") {
        if (s.items.size() != 2) r_.fail(ErrorKind::syntax, s.pos, "malformed :goal");
        goal(s.items[1]);
        have_goal = true;
      } else if (key == ":metric") {
        r_.fail(ErrorKind::unsupported_feature, s.pos, "unsupported feature :metric");
      } else {
        r_.fail(ErrorKind::syntax, s.pos, "unknown problem section " + key);
      }
    }
    if (!have_goal) r_.fail(ErrorKind::syntax, doc.pos, "problem has no :goal");
  }

 private:
  void objects(const SExpr& s) {
    std::size_t pending = 0;
    for (std::size_t i = 1; i < s.items.size(); ++i) {
      const auto& item = s.items[i];
      if (item.is_list) r_.fail(ErrorKind::syntax, item.pos, "unexpected list in :objects");
      if (item.atom == "-") {
        if (i + 1 >= s.items.size() || s.items[i + 1].is_list) {
          r_.fail(ErrorKind::syntax, item.pos, "missing type after '-'");
        }
        const std::string& type = s.items[i + 1].atom;
        if (type != "object" && !d_.type_parent.contains(type)) {
          r_.fail(ErrorKind::unknown_type, s.items[i + 1].pos, "unknown type " + type);
        }
        for (std::size_t k = p_.objects.size() - pending; k < p_.objects.size(); ++k) {
          p_.objects[k].type = type;
          known_[p_.objects[k].name] = type;
        }
        pending = 0;
        ++i;
        continue;
      }
      p_.objects.push_back({item.atom, "object"});
      known_[item.atom] = "object";
      ++pending;
    }
  }

  AtomTemplate ground_atom(const SExpr& e) {
    if (!e.is_list || e.items.empty() || e.items[0].is_list) {
      r_.fail(ErrorKind::syntax, e.pos, "expected a ground atom");
    }
    const std::string& head = e.items[0].atom;
    if (head == "=") r_.fail(ErrorKind::unsupported_feature, e.pos, "unsupported feature numeric/equality fact");
    if (head == "not") r_.fail(ErrorKind::unsupported_feature, e.pos, "unsupported feature negated literal");
    AtomTemplate t;
    t.predicate = head;
    t.pos = e.pos;
    const PredicateDecl* decl = d_.find_predicate(head);
    if (decl == nullptr) r_.fail(ErrorKind::unknown_predicate, e.pos, "unknown predicate " + head);
    if (decl->params.size() + 1 != e.items.size()) {
      r_.fail(ErrorKind::syntax, e.pos, "wrong arity for " + head);
    }
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const auto& arg = e.items[i];
      if (arg.is_list) r_.fail(ErrorKind::syntax, arg.pos, "nested term in atom");
      auto it = known_.find(arg.atom);
      if (it == known_.end()) r_.fail(ErrorKind::unknown_object, arg.pos, "unknown object " + arg.atom);
      if (!d_.is_subtype(it->second, decl->params[i - 1].type)) {
        r_.fail(ErrorKind::type_mismatch, arg.pos,
                "object " + arg.atom + " is not of type " + decl->params[i - 1].type);
      }
      t.args.push_back(arg.atom);
    }
    return t;
  }

  void goal(const SExpr& e) {
    if (!e.is_list || e.items.empty() || e.items[0].is_list) {
      r_.fail(ErrorKind::syntax, e.pos, "malformed goal");
    }
    const std::string& head = e.items[0].atom;
    if (head == "and") {
      for (std::size_t i = 1; i < e.items.size(); ++i) goal(e.items[i]);
    } else if (head == "not") {
      r_.fail(ErrorKind::unsupported_feature, e.pos, "unsupported feature negated goal");
    } else if (head == "or" || head == "imply" || head == "exists" || head == "forall") {
      r_.fail(ErrorKind::unsupported_feature, e.pos, "unsupported feature quantified/disjunctive goal");
    } else {
      p_.goal.push_back(ground_atom(e));
    }
  }

  Reader& r_;
  const Domain& d_;
  Problem& p_;
  std::unordered_map<std::string, std::string> known_;
};

std::string atom_key(std::string_view pred, const std::vector<std::string>& args) {
  std::string key = "(";
  key += pred;
  for (auto& a : args) {
    key += ' ';
    key += a;
  }
  key += ')';
  return key;
}

class Grounder {
 public:
  Grounder(const Domain& d, const Problem& p, const GroundingOptions& opt)
      : d_(d), p_(p), opt_(opt) {}

  GroundProblem run() {
    out_.domain_name = d_.name;
    out_.problem_name = p_.name;
    out_.source_checksum = fnv1a(std::to_string(p_.checksum), d_.checksum);

    std::unordered_map<std::string, std::string> types;
    for (auto& c : d_.constants) {
      if (types.emplace(c.name, c.type).second) objects_.push_back(c);
    }
    for (auto& o : p_.objects) {
      if (types.emplace(o.name, o.type).second) objects_.push_back(o);
    }
    for (auto& o : objects_) out_.objects.push_back(o.name);

    std::unordered_set<std::string> fluent;
    for (auto& a : d_.actions) {
      for (auto& t : a.add) fluent.insert(t.predicate);
      for (auto& t : a.del) fluent.insert(t.predicate);
    }
    for (auto& t : p_.init) {
      const std::string key = atom_key(t.predicate, t.args);
      if (!fluent.contains(t.predicate)) static_facts_.insert(key);
      init_ids_.push_back(intern(key));
    }
    for (auto& t : p_.goal) goal_ids_.push_back(intern(atom_key(t.predicate, t.args)));

    for (auto& schema : d_.actions) ground_schema(schema, fluent);

    const std::size_t universe = out_.propositions.size();
    out_.init = State(universe, init_ids_);
    out_.goal = Goal::partial(universe, goal_ids_);
    return std::move(out_);
  }

 private:
  PropId intern(const std::string& key) {
    auto [it, inserted] = ids_.emplace(key, static_cast<PropId>(out_.propositions.size()));
    if (inserted) out_.propositions.push_back(key);
    return it->second;
  }

  std::string instantiate(const AtomTemplate& t, const ActionSchema& schema,
                          const std::vector<std::size_t>& binding) const {
    std::vector<std::string> args;
    args.reserve(t.args.size());
    for (auto& a : t.args) {
      if (is_variable(a)) {
        for (std::size_t k = 0; k < schema.params.size(); ++k) {
          if (schema.params[k].name == a) {
            args.push_back(objects_[binding[k]].name);
            break;
          }
        }
      } else {
        args.push_back(a);
      }
    }
    return atom_key(t.predicate, args);
  }

  void ground_schema(const ActionSchema& schema, const std::unordered_set<std::string>& fluent) {
    const std::size_t k = schema.params.size();
    std::vector<std::vector<std::size_t>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t o = 0; o < objects_.size(); ++o) {
        if (d_.is_subtype(objects_[o].type, schema.params[i].type)) candidates[i].push_back(o);
      }
    }
    // Static preconditions are checked as soon as their last variable is bound.
    std::vector<std::vector<const AtomTemplate*>> static_at(k + 1);
    for (auto& t : schema.pre) {
      if (fluent.contains(t.predicate)) continue;
      std::size_t depth = 0;
      for (auto& a : t.args) {
        for (std::size_t i = 0; i < k; ++i) {
          if (schema.params[i].name == a) depth = std::max(depth, i + 1);
        }
      }
      static_at[depth].push_back(&t);
    }

    std::vector<std::size_t> binding(k, 0);
    bool warned = false;
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
      for (const AtomTemplate* t : static_at[depth]) {
        if (!static_facts_.contains(instantiate(*t, schema, binding))) return;
      }
      if (depth == k) {
        emit(schema, binding, warned);
        return;
      }
      for (std::size_t o : candidates[depth]) {
        binding[depth] = o;
        rec(depth + 1);
      }
    };
    rec(0);
  }

  void emit(const ActionSchema& schema, const std::vector<std::size_t>& binding, bool& warned) {
    if (out_.actions.size() >= opt_.max_actions) {
      throw PddlError(ErrorKind::capacity_exceeded, p_.file, 0, 0,
                      "ground action count exceeds limit of " + std::to_string(opt_.max_actions));
    }
    GroundAction a;
    std::vector<std::string> args;
    for (std::size_t i = 0; i < binding.size(); ++i) args.push_back(objects_[binding[i]].name);
    a.name = atom_key(schema.name, args);
    for (auto& t : schema.pre) a.pre.push_back(intern(instantiate(t, schema, binding)));
    for (auto& t : schema.add) a.add.push_back(intern(instantiate(t, schema, binding)));
    for (auto& t : schema.del) a.del.push_back(intern(instantiate(t, schema, binding)));
    if (normalize_action(a) && !warned) {
      warned = true;
      out_.warnings.push_back("schema " + schema.name +
                              ": add/delete overlap resolved in favour of add (e.g. " + a.name + ")");
    }
    out_.actions.push_back(std::move(a));
  }

  const Domain& d_;
  const Problem& p_;
  const GroundingOptions& opt_;
  GroundProblem out_;
  std::vector<TypedName> objects_;
  std::unordered_map<std::string, PropId> ids_;
  std::unordered_set<std::string> static_facts_;
  std::vector<PropId> init_ids_;
  std::vector<PropId> goal_ids_;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PddlError(ErrorKind::io, path.string(), 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const PredicateDecl* Domain::find_predicate(std::string_view name) const {
  for (auto& p : predicates) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

bool Domain::is_subtype(std::string_view type, std::string_view ancestor) const {
  if (ancestor == "object") return true;
  std::string cur(type);
  for (std::size_t guard = 0; guard <= type_parent.size(); ++guard) {
    if (cur == ancestor) return true;
    auto it = type_parent.find(cur);
    if (it == type_parent.end()) return false;
    cur = it->second;
  }
  return false;
}

Domain parse_domain(std::string_view text, std::string_view file) {
  Reader reader(text, std::string(file));
  SExpr doc = reader.read_document();
  Domain d;
  d.file = file;
  d.checksum = fnv1a(text);
  DomainParser(reader, d).parse(doc);
  return d;
}

Problem parse_problem(std::string_view text, const Domain& domain, std::string_view file) {
  Reader reader(text, std::string(file));
  SExpr doc = reader.read_document();
  Problem p;
  p.file = file;
  p.checksum = fnv1a(text);
  ProblemParser(reader, domain, p).parse(doc);
  return p;
}

GroundProblem ground(const Domain& domain, const Problem& problem, const GroundingOptions& options) {
  return Grounder(domain, problem, options).run();
}

GroundProblem load(const std::filesystem::path& domain_file,
                   const std::filesystem::path& problem_file, const GroundingOptions& options) {
  const std::string dtext = read_file(domain_file);
  const std::string ptext = read_file(problem_file);
  Domain d = parse_domain(dtext, domain_file.string());
  Problem p = parse_problem(ptext, d, problem_file.string());
  return ground(d, p, options);
}

}  // namespace mgp::pddl
