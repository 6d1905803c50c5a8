#pragma once

#include <memory>
#include <optional>
#include <set>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlab {

// Terms over 0, successor, addition, multiplication and variables.
enum class TermKind { Var, Zero, Succ, Plus, Times };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::string name;  // Var only
  TermPtr lhs;       // Succ operand; left operand of Plus/Times
  TermPtr rhs;       // right operand of Plus/Times
};

TermPtr tvar(std::string name);
TermPtr tzero();
TermPtr tsucc(TermPtr t);
TermPtr tplus(TermPtr a, TermPtr b);
TermPtr ttimes(TermPtr a, TermPtr b);

// Formulas. Negation is sugar: ~A is stored as A -> bot.
// The placeholder atom ($) is a hole for substitution; translations
// introduce it and substitute_placeholder discharges it.
enum class FormulaKind { Bot, Placeholder, Prime, And, Or, Implies, Forall, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  std::string name;           // Prime: predicate symbol; Forall/Exists: bound variable
  std::vector<TermPtr> args;  // Prime only
  FormulaPtr lhs;             // left operand, or quantifier body
  FormulaPtr rhs;             // right operand of And/Or/Implies
};

FormulaPtr mk_bot();
FormulaPtr mk_placeholder();
FormulaPtr mk_prime(std::string pred, std::vector<TermPtr> args = {});
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_forall(std::string var, FormulaPtr body);
FormulaPtr mk_exists(std::string var, FormulaPtr body);
FormulaPtr mk_not(FormulaPtr a);

bool is_not(const FormulaPtr& f);           // matches A -> bot
bool is_quantifier(const FormulaPtr& f);

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Number of AST nodes; every atom (bot, $, prime) counts as one node
// regardless of its argument terms.
std::size_t node_count(const FormulaPtr& f);

// Predicate signature. eq and le are always available as binary
// built-ins; everything else is an uninterpreted symbol with a fixed
// arity. "S" is reserved for the successor function.
// A predicate symbol may be declared at several arities; the standard
// signature gives the uninterpreted letters p,q,r,s arities 0..2 so
// they serve both as propositional atoms and as predicates.
struct Signature {
  std::map<std::string, std::set<int>> predicates;

  static Signature standard();
  bool knows(const std::string& name) const;
  bool knows(const std::string& name, int arity) const;
  std::set<int> arities(const std::string& name) const;
  void declare(const std::string& name, int arity);
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line, int column);
};

// Violated preconditions of library operations (class membership,
// placeholder capture, unsupported rank).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FormulaPtr parse_formula(const std::string& text,
                         const Signature& sig = Signature::standard());
TermPtr parse_term(const std::string& text);

std::string render(const FormulaPtr& f);
std::string render(const TermPtr& t);

void collect_term_vars(const TermPtr& t, std::vector<std::string>& out,
                       std::set<std::string>& seen);

// Free variables in first-occurrence order (left to right).
std::vector<std::string> free_vars(const FormulaPtr& f);

// Every variable name occurring free or bound, for freshness checks.
std::set<std::string> all_names(const FormulaPtr& f);

// Smallest name of the form base1, base2, ... not present in avoid.
// The bare base is not a candidate.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Capture-avoiding substitution of a term for a free variable.
// Bound occurrences shadow; binders whose variable occurs in the
// replacement term are renamed first.
FormulaPtr substitute_term(const FormulaPtr& f, const std::string& var,
                           const TermPtr& replacement);

// Replaces every $ with psi. Throws DomainError when a free variable
// of psi would be captured by a binder above some $ occurrence; the
// message names the variable and the binder.
FormulaPtr substitute_placeholder(const FormulaPtr& f, const FormulaPtr& psi);

// Universally quantifies the free variables in first-occurrence order;
// identity on closed formulas.
FormulaPtr universal_closure(const FormulaPtr& f);

// Renames the binder at the root of a quantified formula (helper for
// prenex merging). Requires fresh not free in the body.
FormulaPtr rename_binder(const FormulaPtr& f, const std::string& fresh);

}  // namespace hlab
