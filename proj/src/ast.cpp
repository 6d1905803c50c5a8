#include "hlab/ast.hpp"

#include <algorithm>
#include <sstream>

namespace hlab {

TermPtr tvar(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->name = std::move(name);
  return t;
}

TermPtr tzero() {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Zero;
  return t;
}

TermPtr tsucc(TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Succ;
  t->lhs = std::move(a);
  return t;
}

TermPtr tplus(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Plus;
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

TermPtr ttimes(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Times;
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

FormulaPtr mk_bot() {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Bot;
  return f;
}

FormulaPtr mk_placeholder() {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Placeholder;
  return f;
}

FormulaPtr mk_prime(std::string pred, std::vector<TermPtr> args) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Prime;
  f->name = std::move(pred);
  f->args = std::move(args);
  return f;
}

static FormulaPtr binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::And, std::move(a), std::move(b));
}

FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Or, std::move(a), std::move(b));
}

FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Implies, std::move(a), std::move(b));
}

static FormulaPtr quant(FormulaKind k, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->name = std::move(var);
  f->lhs = std::move(body);
  return f;
}

FormulaPtr mk_forall(std::string var, FormulaPtr body) {
  return quant(FormulaKind::Forall, std::move(var), std::move(body));
}

FormulaPtr mk_exists(std::string var, FormulaPtr body) {
  return quant(FormulaKind::Exists, std::move(var), std::move(body));
}

FormulaPtr mk_not(FormulaPtr a) {
  return mk_implies(std::move(a), mk_bot());
}

bool is_not(const FormulaPtr& f) {
  return f->kind == FormulaKind::Implies && f->rhs->kind == FormulaKind::Bot;
}

bool is_quantifier(const FormulaPtr& f) {
  return f->kind == FormulaKind::Forall || f->kind == FormulaKind::Exists;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: return a->name == b->name;
    case TermKind::Zero: return true;
    case TermKind::Succ: return equal(a->lhs, b->lhs);
    case TermKind::Plus:
    case TermKind::Times:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
  return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
      return true;
    case FormulaKind::Prime: {
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!equal(a->args[i], b->args[i])) return false;
      return true;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return a->name == b->name && equal(a->lhs, b->lhs);
  }
  return false;
}

std::size_t node_count(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return 1;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return 1 + node_count(f->lhs) + node_count(f->rhs);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return 1 + node_count(f->lhs);
  }
  return 0;
}

Signature Signature::standard() {
  Signature s;
  s.predicates["eq"] = {2};
  s.predicates["le"] = {2};
  for (const char* n : {"p", "q", "r", "s"}) s.predicates[n] = {0, 1, 2};
  return s;
}

bool Signature::knows(const std::string& name) const {
  return predicates.count(name) != 0;
}

bool Signature::knows(const std::string& name, int arity) const {
  auto it = predicates.find(name);
  return it != predicates.end() && it->second.count(arity) != 0;
}

std::set<int> Signature::arities(const std::string& name) const {
  auto it = predicates.find(name);
  if (it == predicates.end())
    throw DomainError("unknown predicate symbol: " + name);
  return it->second;
}

void Signature::declare(const std::string& name, int arity) {
  if (name == "S" || name == "forall" || name == "exists" || name == "bot")
    throw DomainError("reserved word cannot be a predicate: " + name);
  predicates[name].insert(arity);
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

// Rendering. Precedence levels, loosest first:
//   0 formula (quantifiers)   1 ->   2 \/   3 /\   4 ~   5 atom
// A child is parenthesized when its own level is below what the
// context requires.

namespace {

int term_level(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Plus: return 1;
    case TermKind::Times: return 2;
    case TermKind::Succ: return 3;
    default: return 4;
  }
}

void render_term(const TermPtr& t, int need, std::ostringstream& out) {
  bool paren = term_level(t) < need;
  if (paren) out << '(';
  switch (t->kind) {
    case TermKind::Var: out << t->name; break;
    case TermKind::Zero: out << '0'; break;
    case TermKind::Succ:
      out << "S ";
      render_term(t->lhs, 3, out);
      break;
    case TermKind::Plus:
      render_term(t->lhs, 1, out);
      out << " + ";
      render_term(t->rhs, 2, out);
      break;
    case TermKind::Times:
      render_term(t->lhs, 2, out);
      out << " * ";
      render_term(t->rhs, 3, out);
      break;
  }
  if (paren) out << ')';
}

int formula_level(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return 0;
    case FormulaKind::Implies:
      return is_not(f) ? 4 : 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    default: return 5;
  }
}

void render_formula(const FormulaPtr& f, int need, std::ostringstream& out) {
  bool paren = formula_level(f) < need;
  if (paren) out << '(';
  switch (f->kind) {
    case FormulaKind::Bot: out << "bot"; break;
    case FormulaKind::Placeholder: out << '$'; break;
    case FormulaKind::Prime:
      if (f->name == "eq") {
        render_term(f->args[0], 1, out);
        out << " = ";
        render_term(f->args[1], 1, out);
      } else if (f->name == "le") {
        render_term(f->args[0], 1, out);
        out << " <= ";
        render_term(f->args[1], 1, out);
      } else {
        out << f->name;
        if (!f->args.empty()) {
          out << '(';
          for (std::size_t i = 0; i < f->args.size(); ++i) {
            if (i) out << ", ";
            render_term(f->args[i], 1, out);
          }
          out << ')';
        }
      }
      break;
    case FormulaKind::And:
      render_formula(f->lhs, 3, out);
      out << " /\\ ";
      render_formula(f->rhs, 4, out);
      break;
    case FormulaKind::Or:
      render_formula(f->lhs, 2, out);
      out << " \\/ ";
      render_formula(f->rhs, 3, out);
      break;
    case FormulaKind::Implies:
      if (is_not(f)) {
        out << '~';
        render_formula(f->lhs, 4, out);
      } else {
        render_formula(f->lhs, 2, out);
        out << " -> ";
        render_formula(f->rhs, 1, out);
      }
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      out << (f->kind == FormulaKind::Forall ? "forall " : "exists ");
      out << f->name;
      // Consecutive same-kind binders print as one block.
      FormulaPtr body = f->lhs;
      while (body->kind == f->kind) {
        out << ' ' << body->name;
        body = body->lhs;
      }
      out << ". ";
      // An implication body prints parenthesized; every other body
      // keeps the bare maximal-scope form.
      bool wrap = body->kind == FormulaKind::Implies && !is_not(body);
      if (wrap) out << '(';
      render_formula(body, 0, out);
      if (wrap) out << ')';
      break;
    }
  }
  if (paren) out << ')';
}

}  // namespace

std::string render(const TermPtr& t) {
  std::ostringstream out;
  render_term(t, 0, out);
  return out.str();
}

std::string render(const FormulaPtr& f) {
  std::ostringstream out;
  render_formula(f, 0, out);
  return out.str();
}

void collect_term_vars(const TermPtr& t, std::vector<std::string>& out,
                       std::set<std::string>& seen) {
  switch (t->kind) {
    case TermKind::Var:
      if (seen.insert(t->name).second) out.push_back(t->name);
      break;
    case TermKind::Zero:
      break;
    case TermKind::Succ:
      collect_term_vars(t->lhs, out, seen);
      break;
    case TermKind::Plus:
    case TermKind::Times:
      collect_term_vars(t->lhs, out, seen);
      collect_term_vars(t->rhs, out, seen);
      break;
  }
}

namespace {

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::vector<std::string>& out, std::set<std::string>& seen) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
      break;
    case FormulaKind::Prime: {
      std::vector<std::string> vars;
      std::set<std::string> local;
      for (const auto& a : f->args) collect_term_vars(a, vars, local);
      for (const auto& v : vars)
        if (!bound.count(v) && seen.insert(v).second) out.push_back(v);
      break;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_free(f->lhs, bound, out, seen);
      collect_free(f->rhs, bound, out, seen);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool fresh = bound.insert(f->name).second;
      collect_free(f->lhs, bound, out, seen);
      if (fresh) bound.erase(f->name);
      break;
    }
  }
}

void collect_all(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
      break;
    case FormulaKind::Prime: {
      std::vector<std::string> vars;
      std::set<std::string> local;
      for (const auto& a : f->args) collect_term_vars(a, vars, local);
      out.insert(vars.begin(), vars.end());
      break;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_all(f->lhs, out);
      collect_all(f->rhs, out);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out.insert(f->name);
      collect_all(f->lhs, out);
      break;
  }
}

}  // namespace

std::vector<std::string> free_vars(const FormulaPtr& f) {
  std::vector<std::string> out;
  std::set<std::string> bound, seen;
  collect_free(f, bound, out, seen);
  return out;
}

std::set<std::string> all_names(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

namespace {

TermPtr subst_in_term(const TermPtr& t, const std::string& var, const TermPtr& rep) {
  switch (t->kind) {
    case TermKind::Var: return t->name == var ? rep : t;
    case TermKind::Zero: return t;
    case TermKind::Succ: {
      auto a = subst_in_term(t->lhs, var, rep);
      return a == t->lhs ? t : tsucc(a);
    }
    case TermKind::Plus:
    case TermKind::Times: {
      auto a = subst_in_term(t->lhs, var, rep);
      auto b = subst_in_term(t->rhs, var, rep);
      if (a == t->lhs && b == t->rhs) return t;
      return t->kind == TermKind::Plus ? tplus(a, b) : ttimes(a, b);
    }
  }
  return t;
}

bool term_mentions(const TermPtr& t, const std::string& var) {
  switch (t->kind) {
    case TermKind::Var: return t->name == var;
    case TermKind::Zero: return false;
    case TermKind::Succ: return term_mentions(t->lhs, var);
    case TermKind::Plus:
    case TermKind::Times:
      return term_mentions(t->lhs, var) || term_mentions(t->rhs, var);
  }
  return false;
}

}  // namespace

FormulaPtr substitute_term(const FormulaPtr& f, const std::string& var,
                           const TermPtr& replacement) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
      return f;
    case FormulaKind::Prime: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      bool changed = false;
      for (const auto& a : f->args) {
        args.push_back(subst_in_term(a, var, replacement));
        changed = changed || args.back() != a;
      }
      return changed ? mk_prime(f->name, std::move(args)) : f;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      auto a = substitute_term(f->lhs, var, replacement);
      auto b = substitute_term(f->rhs, var, replacement);
      if (a == f->lhs && b == f->rhs) return f;
      return binary(f->kind, a, b);
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      if (f->name == var) return f;
      if (term_mentions(replacement, f->name)) {
        // The binder would capture a variable of the replacement term.
        std::set<std::string> avoid = all_names(f->lhs);
        std::vector<std::string> repvars;
        std::set<std::string> seen;
        collect_term_vars(replacement, repvars, seen);
        avoid.insert(repvars.begin(), repvars.end());
        avoid.insert(var);
        std::string nv = fresh_name(f->name, avoid);
        auto body = substitute_term(f->lhs, f->name, tvar(nv));
        return quant(f->kind, nv, substitute_term(body, var, replacement));
      }
      auto body = substitute_term(f->lhs, var, replacement);
      return body == f->lhs ? f : quant(f->kind, f->name, body);
    }
  }
  return f;
}

namespace {

FormulaPtr subst_ph(const FormulaPtr& f, const FormulaPtr& psi,
                    const std::set<std::string>& psi_free,
                    std::vector<std::pair<std::string, std::string>>& binders) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Prime:
      return f;
    case FormulaKind::Placeholder: {
      for (const auto& [var, binder] : binders) {
        if (psi_free.count(var))
          throw DomainError("placeholder substitution would capture variable '" +
                            var + "' under binder '" + binder + "'");
      }
      return psi;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      auto a = subst_ph(f->lhs, psi, psi_free, binders);
      auto b = subst_ph(f->rhs, psi, psi_free, binders);
      if (a == f->lhs && b == f->rhs) return f;
      return binary(f->kind, a, b);
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      binders.emplace_back(f->name,
                           (f->kind == FormulaKind::Forall ? "forall " : "exists ") +
                               f->name);
      auto body = subst_ph(f->lhs, psi, psi_free, binders);
      binders.pop_back();
      return body == f->lhs ? f : quant(f->kind, f->name, body);
    }
  }
  return f;
}

}  // namespace

FormulaPtr substitute_placeholder(const FormulaPtr& f, const FormulaPtr& psi) {
  auto fv = free_vars(psi);
  std::set<std::string> psi_free(fv.begin(), fv.end());
  std::vector<std::pair<std::string, std::string>> binders;
  return subst_ph(f, psi, psi_free, binders);
}

FormulaPtr universal_closure(const FormulaPtr& f) {
  auto fv = free_vars(f);
  FormulaPtr out = f;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) out = mk_forall(*it, out);
  return out;
}

FormulaPtr rename_binder(const FormulaPtr& f, const std::string& fresh) {
  if (!is_quantifier(f)) throw DomainError("rename_binder: not a quantifier");
  if (f->name == fresh) return f;
  auto names = all_names(f->lhs);
  if (names.count(fresh))
    throw DomainError("rename_binder: name '" + fresh + "' occurs in the body");
  return quant(f->kind, fresh, substitute_term(f->lhs, f->name, tvar(fresh)));
}

}  // namespace hlab
