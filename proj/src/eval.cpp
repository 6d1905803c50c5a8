#include <cstdlib>

#include "hlab/oracle.hpp"

namespace hlab {

namespace {

// Innermost binding wins, so lookup scans from the back.
using Scope = std::vector<std::pair<std::string, std::uint64_t>>;

std::uint64_t eval_term(const TermPtr& t, const Scope& scope) {
  switch (t->kind) {
    case TermKind::Var:
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (it->first == t->name) return it->second;
      throw DomainError("bounded_eval: unassigned variable '" + t->name + "'");
    case TermKind::Zero: return 0;
    case TermKind::Succ: return eval_term(t->lhs, scope) + 1;
    case TermKind::Plus:
      return eval_term(t->lhs, scope) + eval_term(t->rhs, scope);
    case TermKind::Times:
      return eval_term(t->lhs, scope) * eval_term(t->rhs, scope);
  }
  throw DomainError("bounded_eval: malformed term");
}

bool eval_rec(const FormulaPtr& f, int bound, bool ph, const TableMap& tables,
              Scope& scope) {
  switch (f->kind) {
    case FormulaKind::Bot: return false;
    case FormulaKind::Placeholder: return ph;
    case FormulaKind::Prime: {
      std::vector<std::uint64_t> tuple;
      tuple.reserve(f->args.size());
      for (const auto& a : f->args) tuple.push_back(eval_term(a, scope));
      if (f->name == "eq" && tuple.size() == 2) return tuple[0] == tuple[1];
      if (f->name == "le" && tuple.size() == 2) return tuple[0] <= tuple[1];
      auto it = tables.find({f->name, static_cast<int>(f->args.size())});
      if (it == tables.end()) {
        throw DomainError("bounded_eval: no table for predicate '" + f->name +
                          "'/" + std::to_string(f->args.size()));
      }
      return it->second.count(tuple) > 0;
    }
    case FormulaKind::And:
      return eval_rec(f->lhs, bound, ph, tables, scope) &&
             eval_rec(f->rhs, bound, ph, tables, scope);
    case FormulaKind::Or:
      return eval_rec(f->lhs, bound, ph, tables, scope) ||
             eval_rec(f->rhs, bound, ph, tables, scope);
    case FormulaKind::Implies:
      return !eval_rec(f->lhs, bound, ph, tables, scope) ||
             eval_rec(f->rhs, bound, ph, tables, scope);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool ex = f->kind == FormulaKind::Exists;
      scope.emplace_back(f->name, 0);
      for (std::uint64_t v = 0; v <= static_cast<std::uint64_t>(bound); ++v) {
        scope.back().second = v;
        bool b = eval_rec(f->lhs, bound, ph, tables, scope);
        if (b == ex) {
          scope.pop_back();
          return ex;
        }
      }
      scope.pop_back();
      return !ex;
    }
  }
  throw DomainError("bounded_eval: malformed formula");
}

}  // namespace

bool bounded_eval(const FormulaPtr& f, int bound, bool ph,
                  const TableMap& tables, const Env& env) {
  if (bound < 0) throw DomainError("bounded_eval: negative bound");
  Scope scope(env.begin(), env.end());
  return eval_rec(f, bound, ph, tables, scope);
}

std::set<std::pair<std::string, int>> collect_predicates(const FormulaPtr& f) {
  std::set<std::pair<std::string, int>> out;
  std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
    if (!g) return;
    if (g->kind == FormulaKind::Prime && g->name != "eq" && g->name != "le")
      out.insert({g->name, static_cast<int>(g->args.size())});
    walk(g->lhs);
    walk(g->rhs);
  };
  walk(f);
  return out;
}

namespace {

constexpr std::uint64_t kTableDomain = 3;  // tuples range over {0, 1, 2}

std::uint64_t tuple_count(int arity) {
  std::uint64_t n = 1;
  for (int i = 0; i < arity; ++i) n *= kTableDomain;
  return n;
}

std::vector<std::uint64_t> nth_tuple(std::uint64_t index, int arity) {
  std::vector<std::uint64_t> tuple(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = index % kTableDomain;
    index /= kTableDomain;
  }
  return tuple;
}

PredTable table_from_mask(std::uint64_t mask, int arity) {
  PredTable t;
  std::uint64_t n = tuple_count(arity);
  for (std::uint64_t i = 0; i < n; ++i)
    if (mask & (std::uint64_t{1} << i)) t.insert(nth_tuple(i, arity));
  return t;
}

}  // namespace

std::vector<TableMap> make_tables(
    const std::set<std::pair<std::string, int>>& preds, std::uint64_t seed) {
  std::vector<TableMap> out;
  bool small = true;
  std::uint64_t joint = 1;
  for (const auto& [name, arity] : preds) {
    if (arity > 1) small = false;
    if (small) {
      joint *= std::uint64_t{1} << tuple_count(arity);
      if (joint > 512) small = false;
    }
  }
  if (small) {
    // Exhaustive: a mixed-radix counter over per-predicate table masks.
    std::vector<std::pair<std::string, int>> order(preds.begin(), preds.end());
    std::vector<std::uint64_t> radix;
    for (const auto& [name, arity] : order)
      radix.push_back(std::uint64_t{1} << tuple_count(arity));
    std::vector<std::uint64_t> mask(order.size(), 0);
    while (true) {
      TableMap m;
      for (std::size_t i = 0; i < order.size(); ++i)
        m[order[i]] = table_from_mask(mask[i], order[i].second);
      out.push_back(std::move(m));
      std::size_t pos = order.size();
      while (pos > 0) {
        --pos;
        if (++mask[pos] < radix[pos]) break;
        mask[pos] = 0;
        if (pos == 0) return out;
      }
      if (order.empty()) return out;
    }
  }
  std::mt19937_64 eng(seed);
  for (int i = 0; i < 64; ++i) {
    TableMap m;
    for (const auto& key : preds) {
      PredTable t;
      std::uint64_t n = tuple_count(key.second);
      for (std::uint64_t j = 0; j < n; ++j)
        if (eng() & 1) t.insert(nth_tuple(j, key.second));
      m[key] = std::move(t);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HIERARCHY_LAB_SEED")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 2026;
}

std::string describe_tables(bool ph, const TableMap& tables) {
  std::string s = "ph=" + std::string(ph ? "1" : "0");
  for (const auto& [key, table] : tables) {
    s += "; " + key.first + "/" + std::to_string(key.second) + "={";
    bool first = true;
    for (const auto& tuple : table) {
      if (!first) s += ",";
      first = false;
      if (tuple.size() == 1) {
        s += std::to_string(tuple[0]);
      } else {
        s += "(";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(tuple[i]);
        }
        s += ")";
      }
    }
    s += "}";
  }
  return s;
}

namespace {

FormulaPtr close_in_order(const FormulaPtr& f,
                          const std::vector<std::string>& vars) {
  FormulaPtr out = f;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    out = mk_forall(*it, out);
  return out;
}

bool contains_placeholder_node(const FormulaPtr& f) {
  if (!f) return false;
  if (f->kind == FormulaKind::Placeholder) return true;
  return contains_placeholder_node(f->lhs) || contains_placeholder_node(f->rhs);
}

}  // namespace

Verdict check_equiv(const FormulaPtr& f, const FormulaPtr& g,
                    const std::vector<int>& bounds,
                    const std::vector<TableMap>& tables) {
  std::vector<std::string> fv = free_vars(f);
  std::vector<std::string> gv = free_vars(g);
  if (std::set<std::string>(fv.begin(), fv.end()) !=
      std::set<std::string>(gv.begin(), gv.end())) {
    throw DomainError("check_equiv: free variable sets differ");
  }
  FormulaPtr cf = close_in_order(f, fv);
  FormulaPtr cg = close_in_order(g, fv);
  FormulaPtr iff = mk_and(mk_implies(cf, cg), mk_implies(cg, cf));
  bool has_ph = contains_placeholder_node(f) || contains_placeholder_node(g);
  bool inconclusive = false;
  for (const auto& table : tables) {
    for (int phi = 0; phi < (has_ph ? 2 : 1); ++phi) {
      bool ph = phi == 1;
      std::vector<bool> disagree;
      disagree.reserve(bounds.size());
      for (int b : bounds) {
        disagree.push_back(bounded_eval(cf, b, ph, table) !=
                           bounded_eval(cg, b, ph, table));
      }
      for (std::size_t i = 0; i + 1 < disagree.size(); ++i) {
        if (disagree[i] && disagree[i + 1]) {
          Verdict v;
          v.status = Verdict::Status::Refuted;
          v.counterexample = Counterexample{
              iff, describe_tables(ph, table), bounds[i]};
          return v;
        }
      }
      for (bool d : disagree) inconclusive = inconclusive || d;
    }
  }
  Verdict v;
  v.status = inconclusive ? Verdict::Status::Inconclusive
                          : Verdict::Status::Pass;
  return v;
}

Verdict check_equiv(const FormulaPtr& f, const FormulaPtr& g) {
  auto preds = collect_predicates(f);
  auto more = collect_predicates(g);
  preds.insert(more.begin(), more.end());
  return check_equiv(f, g, {3, 5, 8}, make_tables(preds, default_seed()));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below: empty range");
  return eng_() % n;
}

bool Rng::flip() { return (eng_() & 1) != 0; }

}  // namespace hlab
