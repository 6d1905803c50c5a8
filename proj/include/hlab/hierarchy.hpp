#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hlab/ast.hpp"

namespace hlab {

// Formula-class families. Sigma/Pi are strict prenex classes; E/U/F are
// the alternation-path classes with cumulative +-variants; R/J and the
// primed variants are the inductively generated classes; Q and V are
// the classes used for conservation statements; EPi/ESigma/VeePi/BPlus
// are the extended disjunction/implication closures.
enum class ClassFamily {
  Sigma,
  Pi,
  E,
  U,
  F,
  EPlus,
  UPlus,
  FPlus,
  R,
  J,
  RPrime,
  JPrime,
  RDoublePrime,
  JDoublePrime,
  Q,
  V,
  EPi,
  ESigma,
  VeePi,
  BPlus,
};

struct ClassId {
  ClassFamily family;
  int rank;
};

const std::vector<ClassFamily>& all_families();
std::string family_name(ClassFamily f);
std::optional<ClassFamily> family_from_name(const std::string& name);

// An alternation path is a word over {+, -} with adjacent symbols
// distinct; "" is the empty path.
using AltPath = std::string;

std::set<AltPath> alt_paths(const FormulaPtr& f);
int degree(const FormulaPtr& f);
bool is_quantifier_free(const FormulaPtr& f);

// Negative ranks denote the empty class.
bool in_class(const FormulaPtr& f, ClassId c);

bool is_prenex(const FormulaPtr& f);

// Quantifier block word of a prenex formula, outermost block first,
// '+' for an exists block and '-' for a forall block (consecutive
// quantifiers of the same kind form one block). nullopt when f is not
// prenex. The empty word means quantifier-free.
std::optional<std::string> prenex_word(const FormulaPtr& f);

// Embeds a prenex formula into strict Sigma_k/Pi_k by inserting
// vacuous single-variable blocks (fresh names z1, z2, ... skipping
// names occurring in f). Throws DomainError when f is not prenex or
// its block word does not fit under the target.
FormulaPtr pad_to(const FormulaPtr& f, ClassId c);

struct ClassifyReport {
  int degree = 0;
  std::vector<AltPath> paths;  // sorted by length, then lexicographically
  // Minimal rank <= cap per family, in all_families() order; nullopt
  // when no rank <= cap admits the formula.
  std::vector<std::pair<ClassFamily, std::optional<int>>> minima;
  int cap = 4;
};

ClassifyReport classify_report(const FormulaPtr& f, int cap = 4);

}  // namespace hlab
