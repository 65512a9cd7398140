// Copyright 2026 The Semnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semnet/inference.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "semnet/errors.hpp"

namespace semnet::logic {

TermPtr Term::var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::variable;
  t->name = std::move(name);
  return t;
}

TermPtr Term::atom(std::string symbol) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::constant;
  t->name = std::move(symbol);
  return t;
}

TermPtr Term::integer(std::int64_t value) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::constant;
  t->is_number = true;
  t->number = value;
  return t;
}

TermPtr Term::compound(std::string functor, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::compound;
  t->name = std::move(functor);
  t->args = std::move(args);
  return t;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::variable:
      return a->name == b->name;
    case Term::Kind::constant:
      if (a->is_number != b->is_number) return false;
      return a->is_number ? a->number == b->number : a->name == b->name;
    case Term::Kind::compound:
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (!term_equal(a->args[i], b->args[i])) return false;
      }
      return true;
  }
  return false;
}

bool term_ground(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::variable:
      return false;
    case Term::Kind::constant:
      return true;
    case Term::Kind::compound:
      for (const TermPtr& a : t->args) {
        if (!term_ground(a)) return false;
      }
      return true;
  }
  return false;
}

std::string term_to_string(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::variable:
      return t->name;
    case Term::Kind::constant:
      return t->is_number ? std::to_string(t->number) : t->name;
    case Term::Kind::compound: {
      std::string out = t->name + "(";
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) out += ", ";
        out += term_to_string(t->args[i]);
      }
      return out + ")";
    }
  }
  return "";
}

bool Atom::operator==(const Atom& other) const {
  if (predicate != other.predicate || args.size() != other.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!term_equal(args[i], other.args[i])) return false;
  }
  return true;
}

bool atom_ground(const Atom& a) {
  for (const TermPtr& t : a.args) {
    if (!term_ground(t)) return false;
  }
  return true;
}

std::string atom_to_string(const Atom& a) {
  if (a.args.empty()) return a.predicate;
  std::string out = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ", ";
    out += term_to_string(a.args[i]);
  }
  return out + ")";
}

namespace {

TermPtr walk(TermPtr t, const Substitution& s) {
  while (t->kind == Term::Kind::variable) {
    auto bound = s.lookup(t->name);
    if (!bound) break;
    t = *bound;
  }
  return t;
}

bool occurs(const std::string& var, const TermPtr& t, const Substitution& s) {
  TermPtr r = walk(t, s);
  switch (r->kind) {
    case Term::Kind::variable:
      return r->name == var;
    case Term::Kind::constant:
      return false;
    case Term::Kind::compound:
      for (const TermPtr& a : r->args) {
        if (occurs(var, a, s)) return true;
      }
      return false;
  }
  return false;
}

bool unify_rec(const TermPtr& ta, const TermPtr& tb, Substitution& s) {
  TermPtr a = walk(ta, s);
  TermPtr b = walk(tb, s);
  if (a->kind == Term::Kind::variable) {
    if (b->kind == Term::Kind::variable && a->name == b->name) return true;
    if (occurs(a->name, b, s)) return false;
    s.bind(a->name, b);
    return true;
  }
  if (b->kind == Term::Kind::variable) {
    if (occurs(b->name, a, s)) return false;
    s.bind(b->name, a);
    return true;
  }
  if (a->kind != b->kind) return false;
  if (a->kind == Term::Kind::constant) {
    if (a->is_number != b->is_number) return false;
    return a->is_number ? a->number == b->number : a->name == b->name;
  }
  if (a->name != b->name || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    if (!unify_rec(a->args[i], b->args[i], s)) return false;
  }
  return true;
}

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::variable:
      if (std::find(out.begin(), out.end(), t->name) == out.end()) {
        out.push_back(t->name);
      }
      break;
    case Term::Kind::constant:
      break;
    case Term::Kind::compound:
      for (const TermPtr& a : t->args) collect_vars(a, out);
      break;
  }
}

TermPtr rename_term(const TermPtr& t, const std::string& suffix) {
  switch (t->kind) {
    case Term::Kind::variable:
      return Term::var(t->name + suffix);
    case Term::Kind::constant:
      return t;
    case Term::Kind::compound: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const TermPtr& a : t->args) args.push_back(rename_term(a, suffix));
      return Term::compound(t->name, std::move(args));
    }
  }
  return t;
}

Atom rename_atom(const Atom& a, const std::string& suffix) {
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.args.size());
  for (const TermPtr& t : a.args) out.args.push_back(rename_term(t, suffix));
  return out;
}

}  // namespace

void Substitution::bind(const std::string& var, TermPtr term) {
  bindings_[var] = std::move(term);
}

std::optional<TermPtr> Substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

TermPtr Substitution::apply(const TermPtr& t) const {
  TermPtr r = walk(t, *this);
  if (r->kind != Term::Kind::compound) return r;
  std::vector<TermPtr> args;
  args.reserve(r->args.size());
  bool changed = false;
  for (const TermPtr& a : r->args) {
    TermPtr applied = apply(a);
    changed = changed || applied.get() != a.get();
    args.push_back(std::move(applied));
  }
  if (!changed) return r;
  return Term::compound(r->name, std::move(args));
}

Atom Substitution::apply(const Atom& a) const {
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.args.size());
  for (const TermPtr& t : a.args) out.args.push_back(apply(t));
  return out;
}

std::optional<Substitution> unify_terms(const TermPtr& a, const TermPtr& b,
                                        Substitution seed) {
  if (unify_rec(a, b, seed)) return seed;
  return std::nullopt;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size()) {
    return std::nullopt;
  }
  Substitution s;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!unify_rec(a.args[i], b.args[i], s)) return std::nullopt;
  }
  return s;
}

bool match_ground(const Atom& pattern, const Atom& target) {
  if (pattern.predicate != target.predicate ||
      pattern.args.size() != target.args.size()) {
    return false;
  }
  Substitution s;
  std::function<bool(const TermPtr&, const TermPtr&)> match =
      [&](const TermPtr& p, const TermPtr& t) {
        if (p->kind == Term::Kind::variable) {
          auto bound = s.lookup(p->name);
          if (bound) return term_equal(*bound, t);
          s.bind(p->name, t);
          return true;
        }
        if (p->kind != t->kind) return false;
        if (p->kind == Term::Kind::constant) return term_equal(p, t);
        if (p->name != t->name || p->args.size() != t->args.size()) {
          return false;
        }
        for (std::size_t i = 0; i < p->args.size(); ++i) {
          if (!match(p->args[i], t->args[i])) return false;
        }
        return true;
      };
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match(pattern.args[i], target.args[i])) return false;
  }
  return true;
}

std::string HornClause::to_string() const {
  std::string out = atom_to_string(head);
  if (!body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) out += ", ";
      out += atom_to_string(body[i]);
    }
  }
  return out + ".";
}

void Program::add(HornClause clause) {
  by_predicate_[clause.head.predicate].push_back(
      static_cast<int>(clauses_.size()));
  clauses_.push_back(std::move(clause));
}

void Program::add_all(const std::vector<HornClause>& clauses) {
  for (const HornClause& c : clauses) add(c);
}

std::vector<int> Program::candidates(const std::string& predicate) const {
  auto it = by_predicate_.find(predicate);
  if (it == by_predicate_.end()) return {};
  return it->second;
}

namespace {

// Clause text parser: `head :- b1, b2.` or `fact.`; identifiers are
// [A-Za-z0-9_]+, uppercase-initial names are variables, `%` starts a
// comment.
struct ClauseParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit ClauseParser(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& reason) {
    throw Error(ErrorKind::SyntaxError,
                "clause syntax: " + reason + " at offset " +
                    std::to_string(pos))
        .at_position(static_cast<int>(pos));
  }

  bool ident_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string read_ident() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    if (pos == start) fail("expected identifier");
    return text.substr(start, pos - start);
  }

  TermPtr read_term() {
    skip_space();
    if (pos < text.size() &&
        (text[pos] == '-' ||
         std::isdigit(static_cast<unsigned char>(text[pos])))) {
      std::size_t start = pos;
      if (text[pos] == '-') ++pos;
      bool digits = false;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        digits = true;
      }
      std::string raw = text.substr(start, pos - start);
      if (digits && (pos >= text.size() || !ident_char(text[pos]))) {
        std::int64_t n = 0;
        std::from_chars(raw.data(), raw.data() + raw.size(), n);
        return Term::integer(n);
      }
      pos = start;  // identifier starting with a digit, fall through
    }
    std::string name = read_ident();
    skip_space();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      std::vector<TermPtr> args;
      while (true) {
        args.push_back(read_term());
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected , or ) in term arguments");
      }
      return Term::compound(name, std::move(args));
    }
    if (std::isupper(static_cast<unsigned char>(name[0]))) {
      return Term::var(name);
    }
    return Term::atom(name);
  }

  Atom read_atom() {
    std::string name = read_ident();
    if (std::isupper(static_cast<unsigned char>(name[0]))) {
      fail("predicate names start lowercase");
    }
    Atom atom;
    atom.predicate = name;
    skip_space();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      while (true) {
        atom.args.push_back(read_term());
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected , or ) in atom arguments");
      }
    }
    return atom;
  }

  HornClause read_clause() {
    HornClause clause;
    clause.head = read_atom();
    skip_space();
    if (pos + 1 < text.size() && text[pos] == ':' && text[pos + 1] == '-') {
      pos += 2;
      while (true) {
        clause.body.push_back(read_atom());
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
    }
    skip_space();
    if (pos >= text.size() || text[pos] != '.') fail("expected final period");
    ++pos;
    skip_space();
    if (pos != text.size()) fail("trailing text after clause");
    return clause;
  }
};

std::string strip_comment(const std::string& line) {
  std::size_t cut = line.find('%');
  return cut == std::string::npos ? line : line.substr(0, cut);
}

}  // namespace

HornClause parse_clause(const std::string& line) {
  std::string content = strip_comment(line);
  ClauseParser parser(content);
  return parser.read_clause();
}

std::vector<HornClause> parse_clauses(const std::string& text) {
  std::vector<HornClause> out;
  std::istringstream in(text);
  std::string line;
  std::string pending;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string content = strip_comment(line);
    std::size_t b = content.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = content.find_last_not_of(" \t\r");
    pending += content.substr(b, e - b + 1);
    if (!pending.empty() && pending.back() == '.') {
      try {
        out.push_back(parse_clause(pending));
      } catch (Error& err) {
        err.at_line(number);
        throw;
      }
      pending.clear();
    } else {
      pending += ' ';
    }
  }
  if (!pending.empty()) {
    throw Error(ErrorKind::SyntaxError, "unterminated clause: " + pending);
  }
  return out;
}

namespace {

// Proof-tree ancestor chain. Each pending goal points at the chain of
// selected goals it descends from; continuation goals keep their own
// chains, so pruning decisions never leak across sibling subtrees. Nodes
// live on the dfs stack frames, which outlive every goal that can point at
// them.
struct PathNode {
  const Atom& atom;
  bool ground;
  const PathNode* up;
};

struct PendingGoal {
  Atom atom;
  int depth;
  const PathNode* path;
};

// True when the atoms are equal up to a bijective renaming of variables.
bool variant_atoms(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size()) {
    return false;
  }
  std::map<std::string, std::string> fwd;
  std::map<std::string, std::string> bwd;
  std::function<bool(const TermPtr&, const TermPtr&)> walk =
      [&](const TermPtr& x, const TermPtr& y) {
        if (x->kind != y->kind) return false;
        switch (x->kind) {
          case Term::Kind::variable: {
            auto f = fwd.find(x->name);
            auto g = bwd.find(y->name);
            if (f == fwd.end() && g == bwd.end()) {
              fwd.emplace(x->name, y->name);
              bwd.emplace(y->name, x->name);
              return true;
            }
            return f != fwd.end() && g != bwd.end() && f->second == y->name &&
                   g->second == x->name;
          }
          case Term::Kind::constant:
            if (x->is_number != y->is_number) return false;
            return x->is_number ? x->number == y->number : x->name == y->name;
          case Term::Kind::compound:
            if (x->name != y->name || x->args.size() != y->args.size()) {
              return false;
            }
            for (std::size_t i = 0; i < x->args.size(); ++i) {
              if (!walk(x->args[i], y->args[i])) return false;
            }
            return true;
        }
        return false;
      };
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!walk(a.args[i], b.args[i])) return false;
  }
  return true;
}

void collect_free_vars(const TermPtr& t, std::vector<std::string>* out) {
  if (t->kind == Term::Kind::variable) {
    for (const std::string& seen : *out) {
      if (seen == t->name) return;
    }
    out->push_back(t->name);
  } else if (t->kind == Term::Kind::compound) {
    for (const TermPtr& a : t->args) collect_free_vars(a, out);
  }
}

// One-way match of `pattern` onto the ground term `fact`, extending `subst`
// with bindings for the pattern variables.
bool extend_match(const TermPtr& pattern, const TermPtr& fact,
                  Substitution& subst) {
  TermPtr p = subst.apply(pattern);
  switch (p->kind) {
    case Term::Kind::variable:
      subst.bind(p->name, fact);
      return true;
    case Term::Kind::constant:
      if (fact->kind != Term::Kind::constant) return false;
      if (p->is_number != fact->is_number) return false;
      return p->is_number ? p->number == fact->number : p->name == fact->name;
    case Term::Kind::compound: {
      if (fact->kind != Term::Kind::compound || p->name != fact->name ||
          p->args.size() != fact->args.size()) {
        return false;
      }
      for (std::size_t i = 0; i < p->args.size(); ++i) {
        if (!extend_match(p->args[i], fact->args[i], subst)) return false;
      }
      return true;
    }
  }
  return false;
}

struct Solver {
  const Program& program;
  int depth_limit;
  std::size_t max_solutions;
  SolveResult result;
  std::vector<std::string> goal_vars;
  std::vector<HornClause> trace;
  bool function_free = true;
  std::vector<TermPtr> constants;
  bool oracle_ready = false;
  bool oracle_ok = false;
  std::set<std::string> oracle;
  std::map<std::string, std::vector<Atom>> oracle_facts;
  int rename_counter = 0;

  Solver(const Program& p, int limit, std::size_t max)
      : program(p), depth_limit(limit), max_solutions(max) {}

  // Least model of a function-free program, built bottom-up by joining each
  // clause body against the facts derived so far. Used as a rejection
  // filter: a ground goal outside the least model has no proof at any
  // depth, so failing it early is exhaustive, not a cutoff. Success still
  // goes through the resolution search so a trace exists. Programs with a
  // clause whose head keeps a variable after its body is matched have no
  // finite least model over the constant set; the filter turns itself off
  // for those.
  void ensure_oracle() {
    if (oracle_ready) return;
    oracle_ready = true;
    oracle_ok = function_free;
    if (!oracle_ok) return;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const HornClause& clause : program.clauses()) {
        std::vector<Substitution> frontier{Substitution{}};
        for (const Atom& b : clause.body) {
          std::vector<Substitution> joined;
          auto it = oracle_facts.find(b.predicate);
          if (it != oracle_facts.end()) {
            for (const Substitution& s : frontier) {
              for (const Atom& f : it->second) {
                if (f.args.size() != b.args.size()) continue;
                Substitution merged = s;
                bool ok = true;
                for (std::size_t i = 0; ok && i < b.args.size(); ++i) {
                  ok = extend_match(b.args[i], f.args[i], merged);
                }
                if (ok) joined.push_back(std::move(merged));
              }
            }
          }
          frontier = std::move(joined);
          if (frontier.empty()) break;
        }
        for (const Substitution& s : frontier) {
          Atom head = s.apply(clause.head);
          if (!atom_ground(head)) {
            oracle_ok = false;
            oracle.clear();
            oracle_facts.clear();
            return;
          }
          if (oracle.insert(atom_to_string(head)).second) {
            oracle_facts[head.predicate].push_back(std::move(head));
            grew = true;
          }
        }
      }
    }
  }

  // True when the filter is on and rules the ground atom out.
  bool oracle_rejects(const Atom& resolved) {
    ensure_oracle();
    return oracle_ok && oracle.count(atom_to_string(resolved)) == 0;
  }

  // Prunes a ground goal nested under an identical open ancestor; a minimal
  // proof never repeats a ground goal along a branch.
  static bool repeats_ancestor(const Atom& resolved, const PathNode* path) {
    for (const PathNode* node = path; node; node = node->up) {
      if (node->ground && node->atom == resolved) return true;
    }
    return false;
  }

  // Detects recursion through an open goal of the same shape. On a
  // function-free program every derivable instance is ground over the
  // program constants, so instantiating the free variables at such a point
  // is exhaustive, and the ground re-selection falls under the ancestor
  // pruning above. This keeps cyclic rule sets from spinning the search out
  // to the depth limit.
  bool recursive_variant(const Atom& resolved, const PathNode* path) const {
    if (!function_free) return false;
    for (const PathNode* node = path; node; node = node->up) {
      if (!node->ground && variant_atoms(node->atom, resolved)) return true;
    }
    return false;
  }

  // Flags the cutoff only when some clause head could have matched.
  void probe_cutoff(const Atom& resolved, const std::vector<int>& candidates,
                    const Substitution& subst) {
    for (int idx : candidates) {
      std::string suffix = "~" + std::to_string(++rename_counter);
      Atom head = rename_atom(program.clauses()[idx].head, suffix);
      if (head.args.size() != resolved.args.size()) continue;
      Substitution probe = subst;
      bool ok = true;
      for (std::size_t i = 0; ok && i < head.args.size(); ++i) {
        ok = unify_rec(resolved.args[i], head.args[i], probe);
      }
      if (ok) {
        result.depth_limit_reached = true;
        return;
      }
    }
  }

  // First-proof search. Returns true when the goal list has a proof; the
  // clauses the proof used stay on `trace`. On failure `trace` is restored.
  // A ground selected goal binds nothing visible to the goals after it (head
  // unification only touches freshly renamed clause variables), so one proof
  // of it suffices and its continuation runs once. That decomposition keeps
  // exhaustive failure from revisiting the cross product of redundant
  // subproofs.
  bool prove(const std::vector<PendingGoal>& goals,
             const Substitution& subst) {
    if (goals.empty()) return true;

    const PendingGoal& selected = goals.front();
    Atom resolved = subst.apply(selected.atom);
    bool ground = atom_ground(resolved);

    if (ground) {
      if (repeats_ancestor(resolved, selected.path)) return false;
      if (function_free && oracle_rejects(resolved)) return false;
    } else if (function_free) {
      ensure_oracle();
      if (oracle_ok) {
        // Ground the goal over the derivable instances of its predicate;
        // the search below then runs on ground selections only. Every proof
        // on a function-free program proves one of these instances, so this
        // loses nothing and stops redundant subproofs from multiplying.
        auto it = oracle_facts.find(resolved.predicate);
        if (it == oracle_facts.end()) return false;
        for (const Atom& f : it->second) {
          if (f.args.size() != resolved.args.size()) continue;
          Substitution next = subst;
          bool ok = true;
          for (std::size_t i = 0; ok && i < resolved.args.size(); ++i) {
            ok = extend_match(resolved.args[i], f.args[i], next);
          }
          if (ok && prove(goals, next)) return true;
        }
        return false;
      }
      if (recursive_variant(resolved, selected.path)) {
        if (constants.empty()) return false;
        std::vector<std::string> free;
        for (const TermPtr& t : resolved.args) collect_free_vars(t, &free);
        std::vector<std::size_t> pick(free.size(), 0);
        while (true) {
          Substitution next = subst;
          for (std::size_t i = 0; i < free.size(); ++i) {
            next.bind(free[i], constants[pick[i]]);
          }
          if (prove(goals, next)) return true;
          std::size_t pos = 0;
          while (pos < pick.size() && ++pick[pos] == constants.size()) {
            pick[pos] = 0;
            ++pos;
          }
          if (pos == pick.size()) break;
        }
        return false;
      }
    }

    std::vector<int> candidates = program.candidates(resolved.predicate);

    if (selected.depth >= depth_limit) {
      probe_cutoff(resolved, candidates, subst);
      return false;
    }

    PathNode node{resolved, ground, selected.path};
    for (int idx : candidates) {
      const HornClause& clause = program.clauses()[idx];
      std::string suffix = "~" + std::to_string(++rename_counter);
      Atom head = rename_atom(clause.head, suffix);
      if (head.args.size() != resolved.args.size()) continue;
      Substitution next = subst;
      bool ok = true;
      for (std::size_t i = 0; ok && i < head.args.size(); ++i) {
        ok = unify_rec(resolved.args[i], head.args[i], next);
      }
      if (!ok) continue;

      std::size_t mark = trace.size();
      trace.push_back(clause);

      std::vector<PendingGoal> body_goals;
      body_goals.reserve(clause.body.size() + (ground ? 0 : goals.size() - 1));
      for (const Atom& b : clause.body) {
        body_goals.push_back(
            PendingGoal{rename_atom(b, suffix), selected.depth + 1, &node});
      }

      if (ground) {
        if (prove(body_goals, next)) {
          std::vector<PendingGoal> rest(goals.begin() + 1, goals.end());
          if (prove(rest, subst)) return true;
          // The continuation saw none of this goal's bindings, so another
          // proof of it cannot change the outcome.
          trace.resize(mark);
          return false;
        }
        trace.resize(mark);
      } else {
        body_goals.insert(body_goals.end(), goals.begin() + 1, goals.end());
        if (prove(body_goals, next)) return true;
        trace.resize(mark);
      }
    }
    return false;
  }

  // Full answer enumeration. Returns false when it should stop altogether.
  bool dfs(const std::vector<PendingGoal>& goals, const Substitution& subst) {
    if (goals.empty()) {
      Solution solution;
      for (const std::string& v : goal_vars) {
        TermPtr applied = subst.apply(Term::var(v));
        if (applied->kind != Term::Kind::variable || applied->name != v) {
          solution.bindings.bind(v, applied);
        }
      }
      solution.trace = trace;
      result.solutions.push_back(std::move(solution));
      return result.solutions.size() < max_solutions;
    }

    const PendingGoal& selected = goals.front();
    Atom resolved = subst.apply(selected.atom);
    bool ground = atom_ground(resolved);

    if (ground) {
      // A ground goal contributes no bindings, so its proofs all lead to the
      // same answers; find one and move on. Redundant derivations of a
      // ground subgoal do not show up as duplicate solutions.
      if (repeats_ancestor(resolved, selected.path)) return true;
      std::size_t mark = trace.size();
      std::vector<PendingGoal> self{selected};
      if (!prove(self, subst)) return true;
      std::vector<PendingGoal> rest(goals.begin() + 1, goals.end());
      bool keep_going = dfs(rest, subst);
      trace.resize(mark);
      return keep_going;
    }

    if (recursive_variant(resolved, selected.path)) {
      if (constants.empty()) return true;
      std::vector<std::string> free;
      for (const TermPtr& t : resolved.args) collect_free_vars(t, &free);
      std::vector<std::size_t> pick(free.size(), 0);
      while (true) {
        Substitution next = subst;
        for (std::size_t i = 0; i < free.size(); ++i) {
          next.bind(free[i], constants[pick[i]]);
        }
        if (!dfs(goals, next)) return false;
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == constants.size()) {
          pick[pos] = 0;
          ++pos;
        }
        if (pos == pick.size()) break;
      }
      return true;
    }

    std::vector<int> candidates = program.candidates(resolved.predicate);

    if (selected.depth >= depth_limit) {
      probe_cutoff(resolved, candidates, subst);
      return true;
    }

    PathNode node{resolved, ground, selected.path};
    bool keep_going = true;
    for (int idx : candidates) {
      const HornClause& clause = program.clauses()[idx];
      std::string suffix = "~" + std::to_string(++rename_counter);
      Atom head = rename_atom(clause.head, suffix);
      if (head.args.size() != resolved.args.size()) continue;
      Substitution next = subst;
      bool ok = true;
      for (std::size_t i = 0; ok && i < head.args.size(); ++i) {
        ok = unify_rec(resolved.args[i], head.args[i], next);
      }
      if (!ok) continue;

      std::vector<PendingGoal> next_goals;
      next_goals.reserve(clause.body.size() + goals.size() - 1);
      for (const Atom& b : clause.body) {
        next_goals.push_back(
            PendingGoal{rename_atom(b, suffix), selected.depth + 1, &node});
      }
      next_goals.insert(next_goals.end(), goals.begin() + 1, goals.end());

      trace.push_back(clause);
      keep_going = dfs(next_goals, next);
      trace.pop_back();
      if (!keep_going) break;
    }
    return keep_going;
  }
};

void scan_term(const TermPtr& t, bool* function_free,
               std::map<std::string, TermPtr>* constants) {
  switch (t->kind) {
    case Term::Kind::variable:
      return;
    case Term::Kind::constant:
      constants->emplace(term_to_string(t), t);
      return;
    case Term::Kind::compound:
      *function_free = false;
      for (const TermPtr& a : t->args) {
        scan_term(a, function_free, constants);
      }
      return;
  }
}

}  // namespace

SolveResult solve(const std::vector<Atom>& goals, const Program& program,
                  int depth_limit, std::size_t max_solutions) {
  Solver solver(program, depth_limit, max_solutions);
  std::map<std::string, TermPtr> constants;
  for (const HornClause& clause : program.clauses()) {
    for (const TermPtr& t : clause.head.args) {
      scan_term(t, &solver.function_free, &constants);
    }
    for (const Atom& b : clause.body) {
      for (const TermPtr& t : b.args) {
        scan_term(t, &solver.function_free, &constants);
      }
    }
  }
  for (const Atom& g : goals) {
    for (const TermPtr& t : g.args) {
      collect_vars(t, solver.goal_vars);
      scan_term(t, &solver.function_free, &constants);
    }
  }
  for (const auto& [key, term] : constants) {
    solver.constants.push_back(term);
  }
  std::vector<PendingGoal> initial;
  initial.reserve(goals.size());
  for (const Atom& g : goals) {
    initial.push_back(PendingGoal{g, 0, nullptr});
  }
  if (max_solutions > 0) solver.dfs(initial, Substitution{});
  return std::move(solver.result);
}

const char* truth_name(Truth t) {
  switch (t) {
    case Truth::yes: return "yes";
    case Truth::no: return "no";
    case Truth::unknown: return "unknown";
  }
  return "unknown";
}

Truth evaluate_ground(const Atom& atom, const Program& program,
                      int depth_limit) {
  SolveResult result = solve({atom}, program, depth_limit, 1);
  if (!result.solutions.empty()) return Truth::yes;
  return result.depth_limit_reached ? Truth::unknown : Truth::no;
}

TermPtr code_constant(Code code) {
  return Term::atom("c" + std::to_string(code.value));
}

Atom sort_atom(Sort sort, Code code) {
  Atom atom;
  atom.predicate = sort_name(sort);
  atom.args.push_back(code_constant(code));
  return atom;
}

namespace {

std::string symbol_of(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      out += '_';
    } else {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

}  // namespace

std::vector<Atom> compile_facts(const FactStore& store) {
  std::vector<Atom> out;
  for (const PredicateRecord& record : store.records()) {
    out.push_back(sort_atom(record.sort(), record.code()));
    auto schema = schema_of(record.sort());
    for (int i = 0; i < record.slot_count(); ++i) {
      const SlotValue& v = record.get(i);
      if (is_absent(v)) continue;
      Atom atom;
      // The sort `number` already claims number/1; the grammatical-number
      // slot compiles under a distinct symbol to keep arities unique.
      std::string slot = schema[i].name;
      atom.predicate = slot == "number" ? "gram_number" : slot;
      atom.args.push_back(code_constant(record.code()));
      if (const Code* ref = std::get_if<Code>(&v)) {
        atom.args.push_back(code_constant(*ref));
      } else if (const std::int64_t* n = std::get_if<std::int64_t>(&v)) {
        atom.args.push_back(Term::integer(*n));
      } else {
        atom.args.push_back(Term::atom(symbol_of(std::get<std::string>(v))));
      }
      out.push_back(std::move(atom));
    }
  }
  return out;
}

}  // namespace semnet::logic
