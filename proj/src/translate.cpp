#include "hlab/translate.hpp"

#include <algorithm>

#include "hlab/hierarchy.hpp"

namespace hlab {

namespace {

bool contains_placeholder(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Placeholder:
      return true;
    case FormulaKind::Bot:
    case FormulaKind::Prime:
      return false;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return contains_placeholder(f->lhs) || contains_placeholder(f->rhs);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return contains_placeholder(f->lhs);
  }
  return false;
}

// not_ph(f) = f -> $, the $-relative negation.
FormulaPtr not_ph(const FormulaPtr& f) { return mk_implies(f, mk_placeholder()); }

FormulaPtr dollar_rec(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot:
      return mk_placeholder();
    case FormulaKind::Prime:
      return not_ph(not_ph(f));
    case FormulaKind::And:
      return mk_and(dollar_rec(f->lhs), dollar_rec(f->rhs));
    case FormulaKind::Implies:
      return mk_implies(dollar_rec(f->lhs), dollar_rec(f->rhs));
    case FormulaKind::Or:
      return not_ph(not_ph(mk_or(dollar_rec(f->lhs), dollar_rec(f->rhs))));
    case FormulaKind::Forall:
      return mk_forall(f->name, dollar_rec(f->lhs));
    case FormulaKind::Exists:
      return not_ph(not_ph(mk_exists(f->name, dollar_rec(f->lhs))));
    case FormulaKind::Placeholder:
      break;
  }
  throw DomainError("placeholder node reached dollar translation");
}

FormulaPtr a_rec(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Prime:
      return mk_or(f, mk_placeholder());
    case FormulaKind::And:
      return mk_and(a_rec(f->lhs), a_rec(f->rhs));
    case FormulaKind::Or:
      return mk_or(a_rec(f->lhs), a_rec(f->rhs));
    case FormulaKind::Implies:
      return mk_implies(a_rec(f->lhs), a_rec(f->rhs));
    case FormulaKind::Forall:
      return mk_forall(f->name, a_rec(f->lhs));
    case FormulaKind::Exists:
      return mk_exists(f->name, a_rec(f->lhs));
    case FormulaKind::Placeholder:
      break;
  }
  throw DomainError("placeholder node reached A-translation");
}

FormulaPtr kuroda_body(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return f;
    case FormulaKind::And:
      return mk_and(kuroda_body(f->lhs), kuroda_body(f->rhs));
    case FormulaKind::Or:
      return mk_or(kuroda_body(f->lhs), kuroda_body(f->rhs));
    case FormulaKind::Implies:
      return mk_implies(kuroda_body(f->lhs), kuroda_body(f->rhs));
    case FormulaKind::Forall:
      return mk_forall(f->name, mk_not(mk_not(kuroda_body(f->lhs))));
    case FormulaKind::Exists:
      return mk_exists(f->name, kuroda_body(f->lhs));
  }
  return f;
}

}  // namespace

FormulaPtr dollar_translate(const FormulaPtr& f) {
  if (contains_placeholder(f))
    throw DomainError("dollar_translate: input already contains a placeholder");
  return dollar_rec(f);
}

FormulaPtr a_translate(const FormulaPtr& f) {
  if (contains_placeholder(f))
    throw DomainError("a_translate: input already contains a placeholder");
  return a_rec(f);
}

FormulaPtr kuroda_translate(const FormulaPtr& f) {
  return mk_not(mk_not(kuroda_body(f)));
}

FormulaPtr dual(const FormulaPtr& f) {
  if (!is_prenex(f))
    throw DomainError("dual: input is not prenex: " + render(f));
  if (f->kind == FormulaKind::Forall) return mk_exists(f->name, dual(f->lhs));
  if (f->kind == FormulaKind::Exists) return mk_forall(f->name, dual(f->lhs));
  return mk_not(f);
}

FormulaPtr simplify_or_bot(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return f;
    case FormulaKind::Or: {
      FormulaPtr l = simplify_or_bot(f->lhs);
      FormulaPtr r = simplify_or_bot(f->rhs);
      if (r->kind == FormulaKind::Bot) return l;
      if (l->kind == FormulaKind::Bot) return r;
      return mk_or(l, r);
    }
    case FormulaKind::And:
      return mk_and(simplify_or_bot(f->lhs), simplify_or_bot(f->rhs));
    case FormulaKind::Implies:
      return mk_implies(simplify_or_bot(f->lhs), simplify_or_bot(f->rhs));
    case FormulaKind::Forall:
      return mk_forall(f->name, simplify_or_bot(f->lhs));
    case FormulaKind::Exists:
      return mk_exists(f->name, simplify_or_bot(f->lhs));
  }
  return f;
}

std::string scheme_name(SchemeId s) {
  switch (s) {
    case SchemeId::LEM: return "LEM";
    case SchemeId::DNE: return "DNE";
    case SchemeId::DNS: return "DNS";
    case SchemeId::CD: return "CD";
    case SchemeId::DML: return "DML";
    case SchemeId::DMLDual: return "DMLDual";
    case SchemeId::DNEC: return "DNEC";
    case SchemeId::DNSC: return "DNSC";
    case SchemeId::DNERInstance: return "DNERInstance";
  }
  return "?";
}

std::optional<SchemeId> scheme_from_name(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  static const std::pair<const char*, SchemeId> table[] = {
      {"LEM", SchemeId::LEM},           {"DNE", SchemeId::DNE},
      {"DNS", SchemeId::DNS},           {"CD", SchemeId::CD},
      {"DML", SchemeId::DML},           {"DMLDUAL", SchemeId::DMLDual},
      {"DNEC", SchemeId::DNEC},         {"DNSC", SchemeId::DNSC},
      {"DNERINSTANCE", SchemeId::DNERInstance},
  };
  for (const auto& [n, id] : table)
    if (up == n) return id;
  return std::nullopt;
}

namespace {

void require_arity(SchemeId s, const SchemePayload& p, size_t formulas, bool var) {
  if (p.formulas.size() != formulas)
    throw DomainError(scheme_name(s) + " expects " + std::to_string(formulas) +
                      " formula(s), got " + std::to_string(p.formulas.size()));
  if (var && !p.var)
    throw DomainError(scheme_name(s) + " expects a variable name");
  if (!var && p.var)
    throw DomainError(scheme_name(s) + " does not take a variable name");
}

}  // namespace

FormulaPtr scheme_instance(SchemeId s, const SchemePayload& p) {
  switch (s) {
    case SchemeId::LEM: {
      require_arity(s, p, 1, false);
      const auto& f = p.formulas[0];
      return mk_or(f, mk_not(f));
    }
    case SchemeId::DNE: {
      require_arity(s, p, 1, false);
      const auto& f = p.formulas[0];
      return mk_implies(mk_not(mk_not(f)), f);
    }
    case SchemeId::DNS: {
      require_arity(s, p, 1, true);
      const auto& f = p.formulas[0];
      const std::string& x = *p.var;
      return mk_implies(mk_forall(x, mk_not(mk_not(f))),
                        mk_not(mk_not(mk_forall(x, f))));
    }
    case SchemeId::CD: {
      require_arity(s, p, 2, true);
      const auto& f = p.formulas[0];
      const auto& g = p.formulas[1];
      const std::string& x = *p.var;
      auto fv = free_vars(f);
      if (std::find(fv.begin(), fv.end(), x) != fv.end())
        throw DomainError("CD side condition violated: " + x +
                          " occurs free in the first payload formula");
      return mk_implies(mk_forall(x, mk_or(f, g)),
                        mk_or(f, mk_forall(x, g)));
    }
    case SchemeId::DML: {
      require_arity(s, p, 2, false);
      const auto& f = p.formulas[0];
      const auto& g = p.formulas[1];
      return mk_implies(mk_not(mk_and(f, g)), mk_or(mk_not(f), mk_not(g)));
    }
    case SchemeId::DMLDual: {
      require_arity(s, p, 2, false);
      const auto& f = p.formulas[0];
      const auto& g = p.formulas[1];
      if (!is_prenex(f) || !is_prenex(g))
        throw DomainError("DMLDual side condition violated: payloads must be prenex");
      return mk_implies(mk_not(mk_and(f, g)), mk_or(dual(f), dual(g)));
    }
    case SchemeId::DNEC: {
      require_arity(s, p, 1, false);
      const auto& f = p.formulas[0];
      return mk_implies(universal_closure(mk_not(mk_not(f))),
                        universal_closure(f));
    }
    case SchemeId::DNSC: {
      require_arity(s, p, 1, false);
      const auto& f = p.formulas[0];
      return mk_implies(universal_closure(mk_not(mk_not(f))),
                        mk_not(mk_not(universal_closure(f))));
    }
    case SchemeId::DNERInstance:
      throw DomainError("DNERInstance produces a premise/conclusion pair; use dner_instance");
  }
  throw DomainError("unknown scheme");
}

std::pair<FormulaPtr, FormulaPtr> dner_instance(const FormulaPtr& f) {
  return {mk_not(mk_not(f)), f};
}

}  // namespace hlab
