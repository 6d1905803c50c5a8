#include <set>
#include <vector>

#include "hlab/normalize.hpp"

namespace hlab {

namespace {

struct PrefixEntry {
  FormulaKind kind;
  std::string var;
};

std::set<std::string> free_var_set(const FormulaPtr& f) {
  auto fv = free_vars(f);
  return {fv.begin(), fv.end()};
}

// Peels the quantifier prefix off an already-prenex operand, flipping
// quantifier kinds for implication antecedents and renaming binders
// that collide with `used` (free variables of both operands plus
// binders pulled earlier).
FormulaPtr pull_prefix(FormulaPtr side, bool flip, std::vector<PrefixEntry>& prefix,
                       std::set<std::string>& used, std::set<std::string>& avoid) {
  while (is_quantifier(side)) {
    FormulaKind kind = side->kind;
    if (flip)
      kind = kind == FormulaKind::Forall ? FormulaKind::Exists : FormulaKind::Forall;
    std::string x = side->name;
    if (used.count(x)) {
      x = fresh_name(x, avoid);
      avoid.insert(x);
      side = rename_binder(side, x);
    }
    used.insert(x);
    prefix.push_back({kind, x});
    side = side->lhs;
  }
  return side;
}

FormulaPtr prenex_rec(const FormulaPtr& f);

FormulaPtr prenex_binary(const FormulaPtr& f) {
  FormulaPtr l = prenex_rec(f->lhs);
  FormulaPtr r = prenex_rec(f->rhs);
  std::set<std::string> avoid = all_names(l);
  {
    auto rn = all_names(r);
    avoid.insert(rn.begin(), rn.end());
  }
  std::set<std::string> used = free_var_set(l);
  {
    auto rv = free_var_set(r);
    used.insert(rv.begin(), rv.end());
  }
  std::vector<PrefixEntry> prefix;
  FormulaPtr ml = pull_prefix(l, f->kind == FormulaKind::Implies, prefix, used, avoid);
  FormulaPtr mr = pull_prefix(r, false, prefix, used, avoid);
  FormulaPtr out;
  switch (f->kind) {
    case FormulaKind::And: out = mk_and(ml, mr); break;
    case FormulaKind::Or: out = mk_or(ml, mr); break;
    default: out = mk_implies(ml, mr); break;
  }
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    out = it->kind == FormulaKind::Forall ? mk_forall(it->var, out)
                                          : mk_exists(it->var, out);
  return out;
}

FormulaPtr prenex_rec(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return f;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return prenex_binary(f);
    case FormulaKind::Forall:
      return mk_forall(f->name, prenex_rec(f->lhs));
    case FormulaKind::Exists:
      return mk_exists(f->name, prenex_rec(f->lhs));
  }
  return f;
}

}  // namespace

FormulaPtr prenex_classical(const FormulaPtr& f) { return prenex_rec(f); }

namespace {

// Slot state for class-directed prenexation. Slots are numbered 1..k
// outermost first; slot signs alternate starting from the target head
// sign. Each quantifier lands at the innermost slot whose sign matches
// and whose window still fits the subtree's alternation depth.
struct SlotState {
  int k;
  char head;  // '+' for Sigma targets, '-' for Pi
  std::vector<std::vector<std::string>> slots;  // index 1..k
  std::set<std::string> used;
  std::set<std::string> avoid;

  char slot_sign(int s) const {
    return (s % 2 == 1) == (head == '+') ? '+' : '-';
  }
};

FormulaPtr place_quantifiers(const FormulaPtr& f, bool neg, SlotState& st) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return f;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      // Sequenced explicitly: both children append to the shared slot
      // state and left-operand quantifiers must land first.
      FormulaPtr l =
          place_quantifiers(f->lhs, f->kind == FormulaKind::Implies ? !neg : neg, st);
      FormulaPtr r = place_quantifiers(f->rhs, neg, st);
      if (f->kind == FormulaKind::And) return mk_and(l, r);
      if (f->kind == FormulaKind::Or) return mk_or(l, r);
      return mk_implies(l, r);
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool ex = f->kind == FormulaKind::Exists;
      char eff = ex != neg ? '+' : '-';
      int s = st.k - degree(f) + 1;
      if (st.slot_sign(s) != eff) --s;
      if (s < 1)
        throw DomainError("prenex_in_class: quantifier does not fit the target prefix in " +
                          render(f));
      FormulaPtr node = f;
      std::string x = f->name;
      if (st.used.count(x)) {
        x = fresh_name(x, st.avoid);
        st.avoid.insert(x);
        node = rename_binder(f, x);
      }
      st.used.insert(x);
      st.slots[s].push_back(x);
      return place_quantifiers(node->lhs, neg, st);
    }
  }
  return f;
}

}  // namespace

WitnessResult prenex_in_class(const FormulaPtr& f, int k, ClassFamily family) {
  ClassFamily target;
  if (family == ClassFamily::Sigma || family == ClassFamily::E)
    target = ClassFamily::Sigma;
  else if (family == ClassFamily::Pi || family == ClassFamily::U)
    target = ClassFamily::Pi;
  else
    throw DomainError("prenex_in_class: target family must be E/Sigma or U/Pi");
  bool sigma = target == ClassFamily::Sigma;
  ClassFamily pre = sigma ? ClassFamily::EPlus : ClassFamily::UPlus;
  if (k < 0 || !in_class(f, {pre, k}))
    throw DomainError("prenex_in_class: " + render(f) + " is not in " +
                      family_name(pre) + "_" + std::to_string(k));
  if (in_class(f, {target, k}))
    return {f, {target, k}, "none", "none"};

  SlotState st;
  st.k = k;
  st.head = sigma ? '+' : '-';
  st.slots.assign(k + 1, {});
  st.used = [&] {
    auto fv = free_vars(f);
    return std::set<std::string>(fv.begin(), fv.end());
  }();
  st.avoid = all_names(f);
  FormulaPtr out = place_quantifiers(f, false, st);
  for (int s = k; s >= 1; --s) {
    auto& vars = st.slots[s];
    if (vars.empty()) {
      std::string z = fresh_name("z", st.avoid);
      st.avoid.insert(z);
      vars.push_back(z);
    }
    bool uni = st.slot_sign(s) == '-';
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      out = uni ? mk_forall(*it, out) : mk_exists(*it, out);
  }
  std::string rank = std::to_string(k);
  std::string tag = sigma ? "Sigma_" + rank + "-DNE+U_" + rank + "-DNS"
                          : "Pi_" + rank + "-or-Pi_" + rank + "-DNE";
  return {out, {target, k}, tag, tag};
}

WitnessResult prenex_in_class(const FormulaPtr& f, int k) {
  bool e = k >= 0 && in_class(f, {ClassFamily::EPlus, k});
  bool u = k >= 0 && in_class(f, {ClassFamily::UPlus, k});
  if (!e && !u)
    throw DomainError("prenex_in_class: " + render(f) +
                      " is in neither EPlus_" + std::to_string(k) + " nor UPlus_" +
                      std::to_string(k));
  return prenex_in_class(f, k, e ? ClassFamily::Sigma : ClassFamily::Pi);
}

}  // namespace hlab
