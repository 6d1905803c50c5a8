#include "hlab/oracle.hpp"

namespace hlab {

std::vector<FormulaPtr> enumeration_atoms(const EnumConfig& cfg) {
  std::vector<FormulaPtr> atoms;
  for (const auto& [name, arity] : cfg.predicates) {
    if (arity > static_cast<int>(cfg.variables.size())) {
      throw DomainError("variable pool too small for predicate '" + name +
                        "' of arity " + std::to_string(arity));
    }
    std::vector<TermPtr> args;
    for (int i = 0; i < arity; ++i) args.push_back(tvar(cfg.variables[i]));
    atoms.push_back(mk_prime(name, args));
  }
  if (cfg.allow_arithmetic_atoms) {
    for (const auto& u : cfg.variables)
      for (const auto& v : cfg.variables)
        atoms.push_back(mk_prime("eq", {tvar(u), tvar(v)}));
    for (const auto& u : cfg.variables)
      for (const auto& v : cfg.variables)
        atoms.push_back(mk_prime("le", {tvar(u), tvar(v)}));
    for (const auto& u : cfg.variables)
      atoms.push_back(mk_prime("eq", {tvar(u), tzero()}));
  }
  if (cfg.allow_placeholder) atoms.push_back(mk_placeholder());
  atoms.push_back(mk_bot());
  return atoms;
}

namespace {

// Formulas grouped by exact size; children of composite formulas are shared
// with the smaller layers, so memory grows with the number of formulas, not
// with their total tree size.
std::vector<std::vector<FormulaPtr>> build_layers(const EnumConfig& cfg) {
  std::vector<std::vector<FormulaPtr>> layer(
      static_cast<std::size_t>(cfg.max_size) + 1);
  if (cfg.max_size < 1) return layer;
  layer[1] = enumeration_atoms(cfg);
  for (int s = 2; s <= cfg.max_size; ++s) {
    auto& out = layer[static_cast<std::size_t>(s)];
    for (FormulaKind kind :
         {FormulaKind::And, FormulaKind::Or, FormulaKind::Implies}) {
      for (int ls = 1; ls <= s - 2; ++ls) {
        for (const auto& l : layer[static_cast<std::size_t>(ls)]) {
          for (const auto& r : layer[static_cast<std::size_t>(s - 1 - ls)]) {
            switch (kind) {
              case FormulaKind::And: out.push_back(mk_and(l, r)); break;
              case FormulaKind::Or: out.push_back(mk_or(l, r)); break;
              default: out.push_back(mk_implies(l, r)); break;
            }
          }
        }
      }
    }
    for (FormulaKind kind : {FormulaKind::Exists, FormulaKind::Forall}) {
      for (const auto& v : cfg.variables) {
        for (const auto& body : layer[static_cast<std::size_t>(s - 1)]) {
          out.push_back(kind == FormulaKind::Exists ? mk_exists(v, body)
                                                    : mk_forall(v, body));
        }
      }
    }
  }
  return layer;
}

}  // namespace

void enumerate_formulas(const EnumConfig& cfg,
                        const std::function<bool(const FormulaPtr&)>& visit) {
  auto layers = build_layers(cfg);
  for (int s = 1; s <= cfg.max_size; ++s)
    for (const auto& f : layers[static_cast<std::size_t>(s)])
      if (!visit(f)) return;
}

std::vector<std::uint64_t> enumeration_counts(const EnumConfig& cfg) {
  std::vector<std::uint64_t> counts;
  if (cfg.max_size < 1) return counts;
  counts.push_back(enumeration_atoms(cfg).size());
  std::uint64_t quants = 2 * cfg.variables.size();
  for (int s = 2; s <= cfg.max_size; ++s) {
    std::uint64_t n = quants * counts[static_cast<std::size_t>(s - 2)];
    for (int ls = 1; ls <= s - 2; ++ls)
      n += 3 * counts[static_cast<std::size_t>(ls - 1)] *
           counts[static_cast<std::size_t>(s - 2 - ls)];
    counts.push_back(n);
  }
  return counts;
}

Verdict check_class_equality(const ClassId& a, const ClassId& b,
                             const EnumConfig& cfg) {
  Verdict v;
  enumerate_formulas(cfg, [&](const FormulaPtr& f) {
    if (in_class(f, a) != in_class(f, b)) {
      v.status = Verdict::Status::Refuted;
      v.counterexample = Counterexample{
          f, family_name(a.family) + " " + std::to_string(a.rank) + " vs " +
                 family_name(b.family) + " " + std::to_string(b.rank),
          0};
      return false;
    }
    return true;
  });
  return v;
}

}  // namespace hlab
