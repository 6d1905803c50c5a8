#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hlab/ast.hpp"
#include "hlab/hierarchy.hpp"

namespace hlab {

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

// A predicate pool entry is a (name, arity) pair; each pooled predicate
// contributes one atom applied to the first `arity` pool variables.
using PredPool = std::vector<std::pair<std::string, int>>;

struct EnumConfig {
  int max_size = 5;
  PredPool predicates{{"p", 0}, {"q", 1}};
  std::vector<std::string> variables{"x", "y"};
  bool allow_placeholder = false;
  bool allow_arithmetic_atoms = false;
};

// Atoms produced by a config, in the frozen emission order: predicate atoms
// in pool order, then arithmetic atoms (u = v pairs, u <= v pairs, u = 0 per
// variable), then the placeholder if allowed, then bot last.
std::vector<FormulaPtr> enumeration_atoms(const EnumConfig& cfg);

// Visit every formula of size <= cfg.max_size exactly once, smaller sizes
// first.  Within one size: atoms, then And / Or / Implies with the left
// subtree size ascending, then Exists and Forall over each pool variable.
// The stream is deterministic; returning false from visit stops early.
// Quantified formulas are only produced when the variable pool is nonempty.
void enumerate_formulas(const EnumConfig& cfg,
                        const std::function<bool(const FormulaPtr&)>& visit);

// Number of formulas of each exact size 1..max_size under cfg.
std::vector<std::uint64_t> enumeration_counts(const EnumConfig& cfg);

// ---------------------------------------------------------------------------
// Bounded evaluation
// ---------------------------------------------------------------------------

// Finite interpretation of one uninterpreted predicate: the set of accepted
// argument tuples.  Tuples absent from the set are false.
using PredTable = std::set<std::vector<std::uint64_t>>;

// Tables keyed by (name, arity); eq and le are builtin and never looked up.
using TableMap = std::map<std::pair<std::string, int>, PredTable>;

// Variable assignment used to evaluate open formulas.
using Env = std::map<std::string, std::uint64_t>;

// Evaluate f with quantifiers ranging over {0, ..., bound}, terms computed
// in unbounded unsigned arithmetic, the placeholder fixed to ph, and every
// uninterpreted predicate read from its table.  Free variables must be
// covered by env.  Throws DomainError on an unassigned variable or a
// predicate with no table.
bool bounded_eval(const FormulaPtr& f, int bound, bool ph,
                  const TableMap& tables, const Env& env = {});

// ---------------------------------------------------------------------------
// Equivalence checking
// ---------------------------------------------------------------------------

struct Counterexample {
  FormulaPtr formula;       // closed instance that evaluates false
  std::string assignment;   // placeholder value and predicate tables
  int bound = 0;
};

struct Verdict {
  enum class Status { Pass, Refuted, Inconclusive };
  Status status = Status::Pass;
  std::optional<Counterexample> counterexample;
};

// Predicates occurring in f, excluding the builtin eq / le atoms.
std::set<std::pair<std::string, int>> collect_predicates(const FormulaPtr& f);

// Table lists used to instantiate uninterpreted predicates.  The default
// strategy enumerates all tables over {0..2} when every pooled predicate has
// arity <= 1 and the joint count stays at or below 512; otherwise it draws
// 64 pseudorandom tables from the seed.
std::vector<TableMap> make_tables(
    const std::set<std::pair<std::string, int>>& preds, std::uint64_t seed);

// Seed for every randomized component: HIERARCHY_LAB_SEED when set, else a
// fixed default, so identical runs produce identical bits.
std::uint64_t default_seed();

// Stable one-line rendering of a placeholder value plus predicate tables,
// used in counterexamples and suite failure records.
std::string describe_tables(bool ph, const TableMap& tables);

// Decide whether f and g agree under bounded evaluation.  Both formulas are
// closed under the same universal prefix (free variable sets must match,
// else DomainError), then evaluated over every table in `tables`, both
// placeholder values, and each bound in order.  A disagreement that persists
// at two consecutive bounds refutes the pair; disagreement that vanishes as
// the bound grows is inconclusive.  The counterexample stores the closed
// biconditional, replayable with bounded_eval.
Verdict check_equiv(const FormulaPtr& f, const FormulaPtr& g,
                    const std::vector<int>& bounds,
                    const std::vector<TableMap>& tables);

// Same, with default bounds {3, 5, 8} and tables derived from the
// predicates occurring in f and g under the default seed.
Verdict check_equiv(const FormulaPtr& f, const FormulaPtr& g);

// Compare the deciders for two classes over the enumeration stream.
// Refuted carries the first formula on which they disagree.
Verdict check_class_equality(const ClassId& a, const ClassId& b,
                             const EnumConfig& cfg);

// ---------------------------------------------------------------------------
// Random generation
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // uniform value in {0, ..., n-1}; n must be positive
  std::uint64_t below(std::uint64_t n);
  bool flip();

 private:
  std::mt19937_64 eng_;
};

struct GenConfig {
  PredPool predicates{{"p", 0}, {"q", 1}};
  std::vector<std::string> variables{"x", "y", "z", "w"};
  bool allow_arithmetic_atoms = false;
  int atom_budget = 3;  // rough size of quantifier-free pieces
};

// Quantifier-free formula whose atoms use only variables from scope (plus
// 0-ary predicates when scope is empty).
FormulaPtr gen_qf(Rng& rng, const GenConfig& cfg,
                  const std::vector<std::string>& scope);

// Strict prenex formula with exactly k alternating quantifier blocks, the
// outermost matching family (Sigma or Pi), and a quantifier-free matrix.
// When closed is set the matrix only uses bound variables.
FormulaPtr gen_prenex(Rng& rng, const GenConfig& cfg, ClassFamily family,
                      int k, bool closed);

// Random member of EPlus_k / UPlus_k, grammar-directed so membership holds
// by construction.  When closed is set the result has no free variables.
FormulaPtr gen_eplus(Rng& rng, const GenConfig& cfg, int k, bool closed);
FormulaPtr gen_uplus(Rng& rng, const GenConfig& cfg, int k, bool closed);

// ---------------------------------------------------------------------------
// Validation suites
// ---------------------------------------------------------------------------

struct SuiteFailure {
  std::string formula;
  std::string assignment;
  int bound = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t checked = 0;
  std::vector<SuiteFailure> failures;
};

struct SuiteOptions {
  // -1 keeps the suite's own default size / sample count.
  int max_size = -1;
  std::uint64_t seed = 0;  // 0 means default_seed()
};

// Names accepted by run_suite, in display order.
std::vector<std::string> suite_names();

// Run one named suite end to end.  Unknown names throw DomainError.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// Render a report as {"suite": ..., "checked": n, "failures": [...]}.
std::string suite_report_to_json(const SuiteReport& report);

}  // namespace hlab
