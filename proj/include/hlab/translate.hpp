#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlab/ast.hpp"

namespace hlab {

// Friedman-style placeholder translation: primes become doubly
// $-relativized, bot becomes $ itself. Rejects inputs that already
// contain a placeholder.
FormulaPtr dollar_translate(const FormulaPtr& f);

// Replaces every prime subformula P (including bot) by P \/ $ and
// leaves all connectives untouched. Rejects inputs that already
// contain a placeholder.
FormulaPtr a_translate(const FormulaPtr& f);

// Kuroda negative translation: double negation in front, and again
// immediately inside every universal quantifier. This definition is
// the textbook one; see README for sourcing.
FormulaPtr kuroda_translate(const FormulaPtr& f);

// Prenex dual: quantifier prefix flipped, matrix negated. Hard error
// on non-prenex input.
FormulaPtr dual(const FormulaPtr& f);

// Applies only X \/ bot => X and bot \/ X => X, bottom-up. Used to
// collapse a_translate output after substituting bot for $.
FormulaPtr simplify_or_bot(const FormulaPtr& f);

enum class SchemeId { LEM, DNE, DNS, CD, DML, DMLDual, DNEC, DNSC, DNERInstance };

std::string scheme_name(SchemeId s);
std::optional<SchemeId> scheme_from_name(const std::string& name);

// Payload for scheme_instance: one or two formulas plus an optional
// bound-variable name (DNS and CD take one).
struct SchemePayload {
  std::vector<FormulaPtr> formulas;
  std::optional<std::string> var;
};

// Builds the instance of the named scheme over the payload. Arity and
// side conditions (CD: x not free in the first formula; DMLDual:
// prenex payloads) are checked and reported via DomainError.
// DNERInstance is pair-shaped and must go through dner_instance.
FormulaPtr scheme_instance(SchemeId s, const SchemePayload& payload);

// Premise/conclusion pair (~~f, f) for the double-negation
// elimination rule shape.
std::pair<FormulaPtr, FormulaPtr> dner_instance(const FormulaPtr& f);

}  // namespace hlab
