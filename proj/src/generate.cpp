#include "hlab/oracle.hpp"

namespace hlab {

namespace {

struct GenState {
  Rng& rng;
  const GenConfig& cfg;
  int binder_counter = 0;

  std::string fresh_binder() {
    return "x" + std::to_string(++binder_counter);
  }
};

FormulaPtr gen_atom(GenState& st, const std::vector<std::string>& scope) {
  // Collect candidate shapes first so every draw is uniform over what the
  // scope actually permits.
  std::vector<FormulaPtr> pool;
  for (const auto& [name, arity] : st.cfg.predicates) {
    if (arity == 0) {
      pool.push_back(mk_prime(name));
    } else if (!scope.empty()) {
      std::vector<TermPtr> args;
      for (int i = 0; i < arity; ++i)
        args.push_back(tvar(scope[st.rng.below(scope.size())]));
      pool.push_back(mk_prime(name, args));
    }
  }
  if (st.cfg.allow_arithmetic_atoms && !scope.empty()) {
    const auto& u = scope[st.rng.below(scope.size())];
    const auto& v = scope[st.rng.below(scope.size())];
    switch (st.rng.below(3)) {
      case 0: pool.push_back(mk_prime("eq", {tvar(u), tvar(v)})); break;
      case 1: pool.push_back(mk_prime("le", {tvar(u), tvar(v)})); break;
      default: pool.push_back(mk_prime("eq", {tvar(u), tzero()})); break;
    }
  }
  if (pool.empty() || st.rng.below(8) == 0) pool.push_back(mk_bot());
  return pool[st.rng.below(pool.size())];
}

FormulaPtr gen_qf_sized(GenState& st, const std::vector<std::string>& scope,
                        int atoms) {
  if (atoms <= 1) return gen_atom(st, scope);
  int left = 1 + static_cast<int>(st.rng.below(
                    static_cast<std::uint64_t>(atoms - 1)));
  FormulaPtr l = gen_qf_sized(st, scope, left);
  FormulaPtr r = gen_qf_sized(st, scope, atoms - left);
  switch (st.rng.below(3)) {
    case 0: return mk_and(l, r);
    case 1: return mk_or(l, r);
    default: return mk_implies(l, r);
  }
}

FormulaPtr gen_qf_in(GenState& st, const std::vector<std::string>& scope) {
  int budget = st.cfg.atom_budget < 1 ? 1 : st.cfg.atom_budget;
  int atoms = 1 + static_cast<int>(st.rng.below(
                    static_cast<std::uint64_t>(budget)));
  return gen_qf_sized(st, scope, atoms);
}

FormulaPtr gen_prenex_in(GenState& st, ClassFamily family, int k,
                         std::vector<std::string> scope) {
  struct Block {
    bool exists;
    std::vector<std::string> vars;
  };
  std::vector<Block> blocks;
  bool exists = family == ClassFamily::Sigma;
  for (int i = 0; i < k; ++i) {
    Block b;
    b.exists = exists;
    int width = 1 + static_cast<int>(st.rng.below(2));
    for (int j = 0; j < width; ++j) {
      b.vars.push_back(st.fresh_binder());
      scope.push_back(b.vars.back());
    }
    blocks.push_back(std::move(b));
    exists = !exists;
  }
  FormulaPtr f = gen_qf_in(st, scope);
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    for (auto vit = it->vars.rbegin(); vit != it->vars.rend(); ++vit)
      f = it->exists ? mk_exists(*vit, f) : mk_forall(*vit, f);
  }
  return f;
}

// Mutually recursive generators for EPlus_k / UPlus_k.  Every production
// below preserves membership: both classes are closed under conjunction and
// disjunction, an implication flips the antecedent's class, UPlus_k admits
// leading universals and EPlus_k leading existentials, and for k >= 2 a
// dual-side quantifier is absorbed through the EPlus_{k-1} / UPlus_{k-1}
// inclusion.
FormulaPtr gen_u_in(GenState& st, int k, int depth,
                    std::vector<std::string>& scope);

FormulaPtr gen_e_in(GenState& st, int k, int depth,
                    std::vector<std::string>& scope) {
  if (depth <= 0 || k == 0) return gen_qf_in(st, scope);
  switch (st.rng.below(k >= 2 ? 6 : 5)) {
    case 0: return gen_qf_in(st, scope);
    case 1: {
      FormulaPtr l = gen_e_in(st, k, depth - 1, scope);
      FormulaPtr r = gen_e_in(st, k, depth - 1, scope);
      return st.rng.flip() ? mk_and(l, r) : mk_or(l, r);
    }
    case 2: {
      FormulaPtr l = gen_u_in(st, k, depth - 1, scope);
      FormulaPtr r = gen_e_in(st, k, depth - 1, scope);
      return mk_implies(l, r);
    }
    case 3: {
      std::string v = st.fresh_binder();
      scope.push_back(v);
      FormulaPtr body = gen_e_in(st, k, depth - 1, scope);
      scope.pop_back();
      return mk_exists(v, body);
    }
    case 4: return gen_prenex_in(st, ClassFamily::Sigma,
                                 1 + static_cast<int>(st.rng.below(
                                         static_cast<std::uint64_t>(k))),
                                 scope);
    default: {
      std::string v = st.fresh_binder();
      scope.push_back(v);
      FormulaPtr body = gen_u_in(st, k - 1, depth - 1, scope);
      scope.pop_back();
      return mk_forall(v, body);
    }
  }
}

FormulaPtr gen_u_in(GenState& st, int k, int depth,
                    std::vector<std::string>& scope) {
  if (depth <= 0 || k == 0) return gen_qf_in(st, scope);
  switch (st.rng.below(k >= 2 ? 6 : 5)) {
    case 0: return gen_qf_in(st, scope);
    case 1: {
      FormulaPtr l = gen_u_in(st, k, depth - 1, scope);
      FormulaPtr r = gen_u_in(st, k, depth - 1, scope);
      return st.rng.flip() ? mk_and(l, r) : mk_or(l, r);
    }
    case 2: {
      FormulaPtr l = gen_e_in(st, k, depth - 1, scope);
      FormulaPtr r = gen_u_in(st, k, depth - 1, scope);
      return mk_implies(l, r);
    }
    case 3: {
      std::string v = st.fresh_binder();
      scope.push_back(v);
      FormulaPtr body = gen_u_in(st, k, depth - 1, scope);
      scope.pop_back();
      return mk_forall(v, body);
    }
    case 4: return gen_prenex_in(st, ClassFamily::Pi,
                                 1 + static_cast<int>(st.rng.below(
                                         static_cast<std::uint64_t>(k))),
                                 scope);
    default: {
      std::string v = st.fresh_binder();
      scope.push_back(v);
      FormulaPtr body = gen_e_in(st, k - 1, depth - 1, scope);
      scope.pop_back();
      return mk_exists(v, body);
    }
  }
}

}  // namespace

FormulaPtr gen_qf(Rng& rng, const GenConfig& cfg,
                  const std::vector<std::string>& scope) {
  GenState st{rng, cfg};
  return gen_qf_in(st, scope);
}

FormulaPtr gen_prenex(Rng& rng, const GenConfig& cfg, ClassFamily family,
                      int k, bool closed) {
  if (family != ClassFamily::Sigma && family != ClassFamily::Pi)
    throw DomainError("gen_prenex: family must be Sigma or Pi");
  if (k < 0) throw DomainError("gen_prenex: negative rank");
  GenState st{rng, cfg};
  std::vector<std::string> scope;
  if (!closed) {
    // One free variable keeps the formula open without colliding with the
    // numbered binder names.
    scope.push_back(cfg.variables[rng.below(cfg.variables.size())]);
  }
  FormulaPtr f = gen_prenex_in(st, family, k, scope);
  if (k > 0 && !in_class(f, {family, k}))
    throw DomainError("gen_prenex: generator produced an out-of-class formula");
  return f;
}

FormulaPtr gen_eplus(Rng& rng, const GenConfig& cfg, int k, bool closed) {
  if (k < 0) throw DomainError("gen_eplus: negative rank");
  GenState st{rng, cfg};
  std::vector<std::string> scope;
  if (!closed)
    scope.push_back(cfg.variables[rng.below(cfg.variables.size())]);
  FormulaPtr f = gen_e_in(st, k, 2 + static_cast<int>(rng.below(2)), scope);
  if (!in_class(f, {ClassFamily::EPlus, k}))
    throw DomainError("gen_eplus: generator produced an out-of-class formula");
  return f;
}

FormulaPtr gen_uplus(Rng& rng, const GenConfig& cfg, int k, bool closed) {
  if (k < 0) throw DomainError("gen_uplus: negative rank");
  GenState st{rng, cfg};
  std::vector<std::string> scope;
  if (!closed)
    scope.push_back(cfg.variables[rng.below(cfg.variables.size())]);
  FormulaPtr f = gen_u_in(st, k, 2 + static_cast<int>(rng.below(2)), scope);
  if (!in_class(f, {ClassFamily::UPlus, k}))
    throw DomainError("gen_uplus: generator produced an out-of-class formula");
  return f;
}

}  // namespace hlab
