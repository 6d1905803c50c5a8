#include "hlab/json_io.hpp"

namespace hlab {

using nlohmann::json;

json term_to_json(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return {{"k", "var"}, {"n", t->name}};
    case TermKind::Zero: return {{"k", "zero"}};
    case TermKind::Succ: return {{"k", "succ"}, {"a", term_to_json(t->lhs)}};
    case TermKind::Plus:
      return {{"k", "plus"}, {"l", term_to_json(t->lhs)}, {"r", term_to_json(t->rhs)}};
    case TermKind::Times:
      return {{"k", "times"}, {"l", term_to_json(t->lhs)}, {"r", term_to_json(t->rhs)}};
  }
  throw DomainError("unreachable term kind");
}

json formula_to_json(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot: return {{"k", "bot"}};
    case FormulaKind::Placeholder: return {{"k", "ph"}};
    case FormulaKind::Prime: {
      json args = json::array();
      for (const auto& a : f->args) args.push_back(term_to_json(a));
      return {{"k", "prime"}, {"p", f->name}, {"args", args}};
    }
    case FormulaKind::And:
      return {{"k", "and"}, {"l", formula_to_json(f->lhs)}, {"r", formula_to_json(f->rhs)}};
    case FormulaKind::Or:
      return {{"k", "or"}, {"l", formula_to_json(f->lhs)}, {"r", formula_to_json(f->rhs)}};
    case FormulaKind::Implies:
      return {{"k", "imp"}, {"l", formula_to_json(f->lhs)}, {"r", formula_to_json(f->rhs)}};
    case FormulaKind::Forall:
      return {{"k", "all"}, {"v", f->name}, {"b", formula_to_json(f->lhs)}};
    case FormulaKind::Exists:
      return {{"k", "ex"}, {"v", f->name}, {"b", formula_to_json(f->lhs)}};
  }
  throw DomainError("unreachable formula kind");
}

namespace {

std::string tag_of(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j["k"].is_string())
    throw DomainError("AST node must be an object with a string tag \"k\"");
  return j["k"].get<std::string>();
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name))
    throw DomainError("AST node \"" + tag_of(j) + "\" is missing field \"" + name + "\"");
  return j[name];
}

}  // namespace

TermPtr term_from_json(const json& j) {
  std::string k = tag_of(j);
  if (k == "var") return tvar(field(j, "n").get<std::string>());
  if (k == "zero") return tzero();
  if (k == "succ") return tsucc(term_from_json(field(j, "a")));
  if (k == "plus") return tplus(term_from_json(field(j, "l")), term_from_json(field(j, "r")));
  if (k == "times")
    return ttimes(term_from_json(field(j, "l")), term_from_json(field(j, "r")));
  throw DomainError("unknown term tag \"" + k + "\"");
}

FormulaPtr formula_from_json(const json& j) {
  std::string k = tag_of(j);
  if (k == "bot") return mk_bot();
  if (k == "ph") return mk_placeholder();
  if (k == "prime") {
    std::vector<TermPtr> args;
    for (const auto& a : field(j, "args")) args.push_back(term_from_json(a));
    return mk_prime(field(j, "p").get<std::string>(), std::move(args));
  }
  if (k == "and")
    return mk_and(formula_from_json(field(j, "l")), formula_from_json(field(j, "r")));
  if (k == "or")
    return mk_or(formula_from_json(field(j, "l")), formula_from_json(field(j, "r")));
  if (k == "imp")
    return mk_implies(formula_from_json(field(j, "l")), formula_from_json(field(j, "r")));
  if (k == "all")
    return mk_forall(field(j, "v").get<std::string>(), formula_from_json(field(j, "b")));
  if (k == "ex")
    return mk_exists(field(j, "v").get<std::string>(), formula_from_json(field(j, "b")));
  throw DomainError("unknown formula tag \"" + k + "\"");
}

}  // namespace hlab
