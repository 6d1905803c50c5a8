#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "hlab/ast.hpp"
#include "hlab/hierarchy.hpp"

namespace hlab {

// A transformed formula together with its guaranteed class and the
// principle tags under which each implication direction holds:
// forward_over covers witness -> source, backward_over the converse.
// "none" marks a direction that needs no extra principle; "PA" marks
// a direction that is classical only.
struct WitnessResult {
  FormulaPtr witness;
  ClassId target_class;
  std::string forward_over;
  std::string backward_over;
};

enum class Polarity { Pos, Neg };

// Classical prenex normal form: quantifiers pulled to the front with
// capture-avoiding renaming, antecedent quantifiers flipped. Left
// operand prefixes come out before right operand prefixes.
FormulaPtr prenex_classical(const FormulaPtr& f);

// Prenexation constrained to land in strict Sigma_k (inputs in
// EPlus k) or Pi_k (inputs in UPlus k). Formulas in both classes go
// to Sigma_k. Inputs already in the strict class come back unchanged
// with principle "none"; otherwise quantifiers are placed greedily at
// the innermost compatible alternation slot and empty slots receive a
// fresh dummy variable.
WitnessResult prenex_in_class(const FormulaPtr& f, int k);

// Same, with the target side forced: Sigma/E selects Sigma_k,
// Pi/U selects Pi_k.
WitnessResult prenex_in_class(const FormulaPtr& f, int k, ClassFamily family);

// Embeds f into EPi_k when a padding-only repair suffices: members
// pass through, prenex formulas are padded to strict Pi_k, and the
// repair recurses through \/ and forall. Anything else is a domain
// error.
FormulaPtr epi_repair(const FormulaPtr& f, int k);

// Single EPi_k formula equivalent to f /\ g for f, g in EPi_k.
// Pi_k operands merge blockwise into one prenex formula; \/ operands
// distribute; forall operands commute with /\ under a capture check.
FormulaPtr epi_conjunction(const FormulaPtr& f, const FormulaPtr& g, int k);

// ESigma_{k+1} forms equivalent to f /\ g and f \/ g for inputs in
// ESigma_{k+1}: the leading exists blocks are renamed apart and merged
// over an epi_conjunction (resp. disjunction) of the bodies.
std::pair<FormulaPtr, FormulaPtr> esigma_combine(const FormulaPtr& f,
                                                 const FormulaPtr& g, int k);

// EPi_{k+1} witness implying f, for f in UPlus k+1.
WitnessResult u_witness_epi(const FormulaPtr& f, int k);

// EPi_{k+1} witness implying ~f, for f in EPlus k+1.
WitnessResult e_neg_witness_epi(const FormulaPtr& f, int k);

// ESigma_{k+1} witness implying ~f, for f in UPlus k+1.
WitnessResult u_neg_witness_esigma(const FormulaPtr& f, int k);

// ESigma_{k+1} witness implying f, for f in EPlus k+1.
WitnessResult e_witness_esigma(const FormulaPtr& f, int k);

// Strict Sigma_{k+1} witness implying f (Pos, f in EPlus k+1) or ~f
// (Neg, f in UPlus k+1): the ESigma witness with its body prenexed
// into Pi_k.
WitnessResult witness_sigma(const FormulaPtr& f, int k, Polarity pol);

// For f in BPlus k: formulas pos and neg, /\-\/ combinations over
// EPi_k and Sigma_k leaf witnesses, with pos implying f and neg
// implying ~f over the leaf lemmas and conversely classically.
std::pair<FormulaPtr, FormulaPtr> b_decompose(const FormulaPtr& f, int k);

using AtomTest = std::function<bool(const FormulaPtr&)>;

// Distributes \/ over /\ to reach a conjunction of disjunctions whose
// leaves satisfy atom_test. Leaves are never descended into. The
// expansion aborts with a domain error beyond max_nodes output nodes.
FormulaPtr cnf_over_atoms(const FormulaPtr& f, const AtomTest& atom_test,
                          std::size_t max_nodes = 10000);

}  // namespace hlab
