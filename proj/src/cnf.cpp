#include <vector>

#include "hlab/normalize.hpp"

namespace hlab {

namespace {

// A clause is a flat disjunction of atom subformulas; the CNF is a
// flat conjunction of clauses. Weights track the node count of the
// eventual output so runaway distribution aborts early.
struct Cnf {
  std::vector<std::vector<FormulaPtr>> clauses;
  std::size_t weight = 0;
};

std::size_t clause_weight(const std::vector<FormulaPtr>& clause) {
  std::size_t w = clause.size() - 1;
  for (const auto& a : clause) w += node_count(a);
  return w;
}

Cnf cnf_rec(const FormulaPtr& f, const AtomTest& test, std::size_t max_nodes) {
  if (test(f)) {
    Cnf out;
    out.clauses.push_back({f});
    out.weight = node_count(f);
    return out;
  }
  if (f->kind == FormulaKind::And) {
    Cnf l = cnf_rec(f->lhs, test, max_nodes);
    Cnf r = cnf_rec(f->rhs, test, max_nodes);
    for (auto& c : r.clauses) l.clauses.push_back(std::move(c));
    l.weight += r.weight + 1;
    if (l.weight > max_nodes)
      throw DomainError("cnf_over_atoms: expansion exceeds " +
                        std::to_string(max_nodes) + " nodes");
    return l;
  }
  if (f->kind == FormulaKind::Or) {
    Cnf l = cnf_rec(f->lhs, test, max_nodes);
    Cnf r = cnf_rec(f->rhs, test, max_nodes);
    Cnf out;
    for (const auto& cl : l.clauses)
      for (const auto& cr : r.clauses) {
        std::vector<FormulaPtr> merged = cl;
        merged.insert(merged.end(), cr.begin(), cr.end());
        out.weight += clause_weight(merged) + 1;
        if (out.weight > max_nodes)
          throw DomainError("cnf_over_atoms: expansion exceeds " +
                            std::to_string(max_nodes) + " nodes");
        out.clauses.push_back(std::move(merged));
      }
    return out;
  }
  throw DomainError("cnf_over_atoms: leaf fails the atom test: " + render(f));
}

}  // namespace

FormulaPtr cnf_over_atoms(const FormulaPtr& f, const AtomTest& atom_test,
                          std::size_t max_nodes) {
  Cnf cnf = cnf_rec(f, atom_test, max_nodes);
  std::vector<FormulaPtr> conjuncts;
  conjuncts.reserve(cnf.clauses.size());
  for (const auto& clause : cnf.clauses) {
    FormulaPtr d = clause.front();
    for (std::size_t i = 1; i < clause.size(); ++i) d = mk_or(d, clause[i]);
    conjuncts.push_back(d);
  }
  FormulaPtr out = conjuncts.front();
  for (std::size_t i = 1; i < conjuncts.size(); ++i)
    out = mk_and(out, conjuncts[i]);
  return out;
}

}  // namespace hlab
