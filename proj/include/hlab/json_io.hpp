#pragma once

#include <nlohmann/json.hpp>

#include "hlab/ast.hpp"

namespace hlab {

// The wire encoding is frozen by schemas/formula_ast.schema.json.
nlohmann::json term_to_json(const TermPtr& t);
nlohmann::json formula_to_json(const FormulaPtr& f);

// Throw DomainError on malformed input (unknown tag, missing field).
TermPtr term_from_json(const nlohmann::json& j);
FormulaPtr formula_from_json(const nlohmann::json& j);

}  // namespace hlab
