#include <set>
#include <vector>

#include "hlab/normalize.hpp"
#include "hlab/translate.hpp"

namespace hlab {

namespace {

std::set<std::string> free_var_set(const FormulaPtr& f) {
  auto fv = free_vars(f);
  return {fv.begin(), fv.end()};
}

std::string lem_tag(int rank) {
  if (rank < 0) return "none";
  return "Sigma_" + std::to_string(rank) + "-LEM";
}

std::string pi_or_pi_dne_tag(int rank) {
  if (rank < 0) return "none";
  return "Pi_" + std::to_string(rank) + "-or-Pi_" + std::to_string(rank) + "-DNE";
}

}  // namespace

FormulaPtr epi_repair(const FormulaPtr& f, int k) {
  if (k < 0) throw DomainError("epi_repair: negative rank");
  if (in_class(f, {ClassFamily::EPi, k})) return f;
  if (prenex_word(f)) return pad_to(f, {ClassFamily::Pi, k});
  if (f->kind == FormulaKind::Or)
    return mk_or(epi_repair(f->lhs, k), epi_repair(f->rhs, k));
  if (f->kind == FormulaKind::Forall)
    return mk_forall(f->name, epi_repair(f->lhs, k));
  throw DomainError("epi_repair: " + render(f) + " cannot be padded into EPi_" +
                    std::to_string(k));
}

namespace {

// Strips the full quantifier prefix of a strict Pi_k formula into
// per-alternation-level blocks (level 0 outermost, universal), renaming
// any binder that collides with `taken`.
FormulaPtr strip_pi_blocks(FormulaPtr h, int k,
                           std::vector<std::vector<std::string>>& blocks,
                           std::set<std::string>& taken,
                           std::set<std::string>& avoid) {
  blocks.assign(k, {});
  int level = -1;
  FormulaKind cur = FormulaKind::Bot;
  while (is_quantifier(h)) {
    if (level < 0 || h->kind != cur) {
      ++level;
      cur = h->kind;
    }
    std::string x = h->name;
    if (taken.count(x)) {
      x = fresh_name(x, avoid);
      avoid.insert(x);
      h = rename_binder(h, x);
    }
    taken.insert(x);
    blocks[level].push_back(x);
    h = h->lhs;
  }
  return h;
}

// Blockwise merge of two strict Pi_k formulas into one strict Pi_k
// conjunction: per alternation level, left blocks precede right blocks.
FormulaPtr merge_pi_conjunction(const FormulaPtr& f, const FormulaPtr& g, int k) {
  std::set<std::string> avoid = all_names(f);
  {
    auto gn = all_names(g);
    avoid.insert(gn.begin(), gn.end());
  }
  std::set<std::string> taken = free_var_set(f);
  {
    auto gv = free_var_set(g);
    taken.insert(gv.begin(), gv.end());
  }
  std::vector<std::vector<std::string>> fb, gb;
  FormulaPtr mf = strip_pi_blocks(f, k, fb, taken, avoid);
  FormulaPtr mg = strip_pi_blocks(g, k, gb, taken, avoid);
  FormulaPtr out = mk_and(mf, mg);
  for (int level = k - 1; level >= 0; --level) {
    bool uni = level % 2 == 0;
    std::vector<std::string> vars = fb[level];
    vars.insert(vars.end(), gb[level].begin(), gb[level].end());
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      out = uni ? mk_forall(*it, out) : mk_exists(*it, out);
  }
  return out;
}

FormulaPtr epi_conj_rec(const FormulaPtr& f, const FormulaPtr& g, int k) {
  if (k == 0) return mk_and(f, g);
  bool f_strict = in_class(f, {ClassFamily::Pi, k});
  bool g_strict = in_class(g, {ClassFamily::Pi, k});
  if (f_strict && g_strict) return merge_pi_conjunction(f, g, k);
  // A strict operand is a leaf here: descending under its prefix would
  // leave the class, so only the loose side is taken apart.
  if (!g_strict && g->kind == FormulaKind::Or)
    return mk_or(epi_conj_rec(f, g->lhs, k), epi_conj_rec(f, g->rhs, k));
  if (!g_strict && g->kind == FormulaKind::Forall) {
    FormulaPtr node = g;
    auto fnames = all_names(f);
    if (fnames.count(g->name)) {
      auto avoid = fnames;
      auto gn = all_names(g);
      avoid.insert(gn.begin(), gn.end());
      node = rename_binder(g, fresh_name(g->name, avoid));
    }
    return mk_forall(node->name, epi_conj_rec(f, node->lhs, k));
  }
  if (!f_strict && f->kind == FormulaKind::Or)
    return mk_or(epi_conj_rec(f->lhs, g, k), epi_conj_rec(f->rhs, g, k));
  if (!f_strict && f->kind == FormulaKind::Forall) {
    FormulaPtr node = f;
    auto gnames = all_names(g);
    if (gnames.count(f->name)) {
      auto avoid = gnames;
      auto fn = all_names(f);
      avoid.insert(fn.begin(), fn.end());
      node = rename_binder(f, fresh_name(f->name, avoid));
    }
    return mk_forall(node->name, epi_conj_rec(node->lhs, g, k));
  }
  throw DomainError("epi_conjunction: unexpected shape " + render(f) + " / " + render(g));
}

}  // namespace

FormulaPtr epi_conjunction(const FormulaPtr& f, const FormulaPtr& g, int k) {
  if (!in_class(f, {ClassFamily::EPi, k}))
    throw DomainError("epi_conjunction: " + render(f) + " is not in EPi_" +
                      std::to_string(k));
  if (!in_class(g, {ClassFamily::EPi, k}))
    throw DomainError("epi_conjunction: " + render(g) + " is not in EPi_" +
                      std::to_string(k));
  return epi_conj_rec(f, g, k);
}

namespace {

// Strips a maximal leading exists block, renaming binders that collide
// with `taken`.
FormulaPtr strip_exists_block(FormulaPtr h, std::vector<std::string>& vars,
                              std::set<std::string>& taken,
                              std::set<std::string>& avoid) {
  while (h->kind == FormulaKind::Exists) {
    std::string x = h->name;
    if (taken.count(x)) {
      x = fresh_name(x, avoid);
      avoid.insert(x);
      h = rename_binder(h, x);
    }
    taken.insert(x);
    vars.push_back(x);
    h = h->lhs;
  }
  return h;
}

FormulaPtr wrap_exists(const std::vector<std::string>& vars, FormulaPtr body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    body = mk_exists(*it, body);
  return body;
}

}  // namespace

std::pair<FormulaPtr, FormulaPtr> esigma_combine(const FormulaPtr& f,
                                                 const FormulaPtr& g, int k) {
  if (k < 0) throw DomainError("esigma_combine: negative rank");
  ClassId cls{ClassFamily::ESigma, k + 1};
  if (!in_class(f, cls))
    throw DomainError("esigma_combine: " + render(f) + " is not in ESigma_" +
                      std::to_string(k + 1));
  if (!in_class(g, cls))
    throw DomainError("esigma_combine: " + render(g) + " is not in ESigma_" +
                      std::to_string(k + 1));
  std::set<std::string> avoid = all_names(f);
  {
    auto gn = all_names(g);
    avoid.insert(gn.begin(), gn.end());
  }
  std::set<std::string> taken = free_var_set(f);
  {
    auto gv = free_var_set(g);
    taken.insert(gv.begin(), gv.end());
  }
  std::vector<std::string> xs, ys;
  FormulaPtr bf = strip_exists_block(f, xs, taken, avoid);
  FormulaPtr bg = strip_exists_block(g, ys, taken, avoid);
  std::vector<std::string> block = xs;
  block.insert(block.end(), ys.begin(), ys.end());
  FormulaPtr conj = wrap_exists(block, epi_conjunction(bf, bg, k));
  FormulaPtr disj = wrap_exists(block, mk_or(bf, bg));
  return {conj, disj};
}

namespace {

FormulaPtr epi_pos(const FormulaPtr& f, int k);
FormulaPtr epi_neg(const FormulaPtr& f, int k);

FormulaPtr conj_repaired(const FormulaPtr& a, const FormulaPtr& b, int k) {
  return epi_conjunction(epi_repair(a, k), epi_repair(b, k), k);
}

// EPi_{k+1} recursion, positive side: f ranges over UPlus k+1 and the
// result (after boundary repair) implies f.
FormulaPtr epi_pos(const FormulaPtr& f, int k) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return f;
    case FormulaKind::And:
      return conj_repaired(epi_pos(f->lhs, k), epi_pos(f->rhs, k), k + 1);
    case FormulaKind::Or:
      return mk_or(epi_pos(f->lhs, k), epi_pos(f->rhs, k));
    case FormulaKind::Implies:
      return mk_or(epi_neg(f->lhs, k), epi_pos(f->rhs, k));
    case FormulaKind::Forall:
      return mk_forall(f->name, epi_pos(f->lhs, k));
    case FormulaKind::Exists:
      // An exists-rooted member of UPlus k+1 sits in EPlus k.
      return prenex_in_class(f, k, ClassFamily::Sigma).witness;
  }
  throw DomainError("epi_pos: unreachable");
}

// Negative side: f ranges over EPlus k+1 and the result implies ~f.
FormulaPtr epi_neg(const FormulaPtr& f, int k) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return mk_not(f);
    case FormulaKind::And:
      return mk_or(epi_neg(f->lhs, k), epi_neg(f->rhs, k));
    case FormulaKind::Or:
      return conj_repaired(epi_neg(f->lhs, k), epi_neg(f->rhs, k), k + 1);
    case FormulaKind::Implies:
      return conj_repaired(epi_pos(f->lhs, k), epi_neg(f->rhs, k), k + 1);
    case FormulaKind::Exists:
      return mk_forall(f->name, epi_neg(f->lhs, k));
    case FormulaKind::Forall:
      // A forall-rooted member of EPlus k+1 sits in UPlus k; its dual
      // prenex form lands in Sigma_k and implies the negation.
      return dual(prenex_in_class(f, k, ClassFamily::Pi).witness);
  }
  throw DomainError("epi_neg: unreachable");
}

}  // namespace

WitnessResult u_witness_epi(const FormulaPtr& f, int k) {
  if (k < 0 || !in_class(f, {ClassFamily::UPlus, k + 1}))
    throw DomainError("u_witness_epi: " + render(f) + " is not in UPlus_" +
                      std::to_string(k + 1));
  FormulaPtr w = epi_repair(epi_pos(f, k), k + 1);
  return {w, {ClassFamily::EPi, k + 1}, lem_tag(k), "PA"};
}

WitnessResult e_neg_witness_epi(const FormulaPtr& f, int k) {
  if (k < 0 || !in_class(f, {ClassFamily::EPlus, k + 1}))
    throw DomainError("e_neg_witness_epi: " + render(f) + " is not in EPlus_" +
                      std::to_string(k + 1));
  FormulaPtr w = epi_repair(epi_neg(f, k), k + 1);
  return {w, {ClassFamily::EPi, k + 1}, lem_tag(k), "PA"};
}

namespace {

FormulaPtr esig_pos(const FormulaPtr& f, int k);
FormulaPtr esig_neg(const FormulaPtr& f, int k);

// ESigma_{k+1} recursion, negative side: f ranges over UPlus k+1 and
// the result implies ~f. Rank-drop base first, then the structural
// clauses of the negative-side grammar.
FormulaPtr esig_neg(const FormulaPtr& f, int k) {
  if (k == 0) {
    if (is_quantifier_free(f)) return mk_not(f);
  } else if (in_class(f, {ClassFamily::EPlus, k})) {
    return e_neg_witness_epi(f, k - 1).witness;
  }
  switch (f->kind) {
    case FormulaKind::Or:
      return esigma_combine(esig_neg(f->lhs, k), esig_neg(f->rhs, k), k).first;
    case FormulaKind::And:
      return esigma_combine(esig_neg(f->lhs, k), esig_neg(f->rhs, k), k).second;
    case FormulaKind::Implies:
      return esigma_combine(esig_pos(f->lhs, k), esig_neg(f->rhs, k), k).first;
    case FormulaKind::Forall:
      return mk_exists(f->name, esig_neg(f->lhs, k));
    default:
      throw DomainError("u_neg_witness_esigma: unexpected shape " + render(f));
  }
}

// Positive side: f ranges over EPlus k+1 and the result implies f.
FormulaPtr esig_pos(const FormulaPtr& f, int k) {
  if (k == 0) {
    if (is_quantifier_free(f)) return f;
  } else if (in_class(f, {ClassFamily::UPlus, k})) {
    return u_witness_epi(f, k - 1).witness;
  }
  switch (f->kind) {
    case FormulaKind::Or:
      return esigma_combine(esig_pos(f->lhs, k), esig_pos(f->rhs, k), k).second;
    case FormulaKind::And:
      return esigma_combine(esig_pos(f->lhs, k), esig_pos(f->rhs, k), k).first;
    case FormulaKind::Implies:
      return esigma_combine(esig_neg(f->lhs, k), esig_pos(f->rhs, k), k).second;
    case FormulaKind::Exists:
      return mk_exists(f->name, esig_pos(f->lhs, k));
    default:
      throw DomainError("e_witness_esigma: unexpected shape " + render(f));
  }
}

}  // namespace

WitnessResult u_neg_witness_esigma(const FormulaPtr& f, int k) {
  if (k < 0 || !in_class(f, {ClassFamily::UPlus, k + 1}))
    throw DomainError("u_neg_witness_esigma: " + render(f) + " is not in UPlus_" +
                      std::to_string(k + 1));
  return {esig_neg(f, k), {ClassFamily::ESigma, k + 1}, lem_tag(k - 1), "PA"};
}

WitnessResult e_witness_esigma(const FormulaPtr& f, int k) {
  if (k < 0 || !in_class(f, {ClassFamily::EPlus, k + 1}))
    throw DomainError("e_witness_esigma: " + render(f) + " is not in EPlus_" +
                      std::to_string(k + 1));
  return {esig_pos(f, k), {ClassFamily::ESigma, k + 1}, lem_tag(k - 1), "PA"};
}

WitnessResult witness_sigma(const FormulaPtr& f, int k, Polarity pol) {
  WitnessResult base = pol == Polarity::Pos ? e_witness_esigma(f, k)
                                            : u_neg_witness_esigma(f, k);
  std::vector<std::string> vars;
  FormulaPtr body = base.witness;
  while (body->kind == FormulaKind::Exists) {
    vars.push_back(body->name);
    body = body->lhs;
  }
  FormulaPtr inner = prenex_in_class(body, k, ClassFamily::Pi).witness;
  FormulaPtr w = wrap_exists(vars, inner);
  if (vars.empty()) w = pad_to(w, {ClassFamily::Sigma, k + 1});
  return {w, {ClassFamily::Sigma, k + 1}, pi_or_pi_dne_tag(k), "PA"};
}

namespace {

std::pair<FormulaPtr, FormulaPtr> b_rec(const FormulaPtr& f, int k) {
  if (is_quantifier_free(f)) return {f, mk_not(f)};
  switch (f->kind) {
    case FormulaKind::And: {
      auto [p1, n1] = b_rec(f->lhs, k);
      auto [p2, n2] = b_rec(f->rhs, k);
      return {mk_and(p1, p2), mk_or(n1, n2)};
    }
    case FormulaKind::Or: {
      auto [p1, n1] = b_rec(f->lhs, k);
      auto [p2, n2] = b_rec(f->rhs, k);
      return {mk_or(p1, p2), mk_and(n1, n2)};
    }
    case FormulaKind::Implies: {
      auto [p1, n1] = b_rec(f->lhs, k);
      auto [p2, n2] = b_rec(f->rhs, k);
      return {mk_or(n1, p2), mk_and(p1, n2)};
    }
    default:
      break;
  }
  if (in_class(f, {ClassFamily::UPlus, k}))
    return {u_witness_epi(f, k - 1).witness,
            witness_sigma(f, k - 1, Polarity::Neg).witness};
  if (in_class(f, {ClassFamily::EPlus, k}))
    return {witness_sigma(f, k - 1, Polarity::Pos).witness,
            e_neg_witness_epi(f, k - 1).witness};
  throw DomainError("b_decompose: unexpected shape " + render(f));
}

}  // namespace

std::pair<FormulaPtr, FormulaPtr> b_decompose(const FormulaPtr& f, int k) {
  if (k < 0 || !in_class(f, {ClassFamily::BPlus, k}))
    throw DomainError("b_decompose: " + render(f) + " is not in BPlus_" +
                      std::to_string(k));
  return b_rec(f, k);
}

}  // namespace hlab
