#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "hlab/ast.hpp"
#include "hlab/hierarchy.hpp"
#include "hlab/oracle.hpp"

using namespace hlab;

namespace {
FormulaPtr P(const std::string& s) { return parse_formula(s); }

std::vector<FormulaPtr> first_n(const EnumConfig& cfg, std::size_t n) {
  std::vector<FormulaPtr> out;
  enumerate_formulas(cfg, [&](const FormulaPtr& f) {
    out.push_back(f);
    return out.size() < n;
  });
  return out;
}
}  // namespace

TEST_CASE("enumeration counts per size are frozen") {
  EnumConfig cfg;
  cfg.max_size = 8;
  CHECK(enumeration_counts(cfg) ==
        std::vector<std::uint64_t>{3, 12, 75, 516, 3846, 30072, 243543, 2024580});
  // The stream agrees with the closed-form counts.
  cfg.max_size = 5;
  std::uint64_t seen = 0;
  enumerate_formulas(cfg, [&](const FormulaPtr&) {
    ++seen;
    return true;
  });
  CHECK(seen == 3 + 12 + 75 + 516 + 3846);
}

TEST_CASE("enumeration emits atoms first and bot last") {
  EnumConfig cfg;
  auto head = first_n(cfg, 4);
  REQUIRE(head.size() == 4);
  CHECK(render(head[0]) == "p");
  CHECK(render(head[1]) == "q(x)");
  CHECK(render(head[2]) == "bot");
  CHECK(render(head[3]) == "exists x. p");
}

TEST_CASE("enumeration honors the atom configuration") {
  EnumConfig cfg;
  cfg.predicates = {{"p", 0}};
  cfg.variables = {"x"};
  cfg.allow_placeholder = true;
  auto head = first_n(cfg, 3);
  CHECK(render(head[0]) == "p");
  CHECK(render(head[1]) == "$");
  CHECK(render(head[2]) == "bot");

  EnumConfig arith;
  arith.allow_arithmetic_atoms = true;
  bool saw_comparison = false;
  enumerate_formulas(arith, [&](const FormulaPtr& f) {
    if (f->kind == FormulaKind::Prime && (f->name == "eq" || f->name == "le"))
      saw_comparison = true;
    return !saw_comparison;
  });
  CHECK(saw_comparison);

  EnumConfig starved;
  starved.predicates = {{"r", 2}};
  starved.variables = {"x"};
  CHECK_THROWS_AS(enumeration_atoms(starved), DomainError);
}

TEST_CASE("bounded evaluation of closed formulas") {
  TableMap tables;
  tables[{"q", 1}] = PredTable{{0}, {2}};
  tables[{"p", 0}] = PredTable{};
  CHECK(bounded_eval(P("exists x. q(x)"), 3, false, tables));
  CHECK_FALSE(bounded_eval(P("forall x. q(x)"), 3, false, tables));
  CHECK(bounded_eval(P("forall x. q(x)"), 0, false, tables));
  CHECK_FALSE(bounded_eval(P("p"), 3, false, tables));
  CHECK(bounded_eval(P("p -> bot"), 3, false, tables));
  CHECK(bounded_eval(P("$"), 3, true, tables));
  CHECK_FALSE(bounded_eval(P("$"), 3, false, tables));

  // eq and le are interpreted, terms evaluate over the naturals.
  TableMap empty;
  CHECK(bounded_eval(P("S 0 + S 0 = S S 0"), 0, false, empty));
  CHECK(bounded_eval(P("forall x. x <= x * S x + S 0"), 5, false, empty));
  CHECK_FALSE(bounded_eval(P("exists x. S x = 0"), 5, false, empty));

  // Free variables read from the environment; missing tables are errors.
  CHECK(bounded_eval(P("x = S 0"), 3, false, empty, {{"x", 1}}));
  CHECK_THROWS_AS(bounded_eval(P("r(x, y)"), 3, false, empty, {{"x", 0}, {"y", 0}}),
                  DomainError);
  CHECK_THROWS_AS(bounded_eval(P("p"), -1, false, tables), DomainError);
}

TEST_CASE("predicate collection and table construction") {
  auto preds = collect_predicates(P("q(x) /\\ (p -> r(x, y)) \\/ x = 0"));
  CHECK(preds == std::set<std::pair<std::string, int>>{
                     {"p", 0}, {"q", 1}, {"r", 2}});
  // Small joint spaces enumerate exhaustively: 2 options for p/0 times
  // 2^3 for q/1 over the three-point table domain.
  auto small = make_tables({{"p", 0}, {"q", 1}}, 7);
  CHECK(small.size() == 16);
  // A binary predicate forces sampling at a fixed budget.
  auto sampled = make_tables({{"r", 2}}, 7);
  CHECK(sampled.size() == 64);
  CHECK(describe_tables(true, small[0]).find("ph=1") == 0);
}

TEST_CASE("equivalence checking over bounds and tables") {
  Verdict ok = check_equiv(P("p \\/ q"), P("q \\/ p"));
  CHECK(ok.status == Verdict::Status::Pass);
  CHECK(check_equiv(P("~~q(x)"), P("q(x)")).status == Verdict::Status::Pass);

  Verdict bad = check_equiv(P("exists x. q(x)"), P("forall x. q(x)"));
  REQUIRE(bad.status == Verdict::Status::Refuted);
  REQUIRE(bad.counterexample.has_value());
  // The counterexample replays: the biconditional fails at its bound.
  const Counterexample& ce = *bad.counterexample;
  CHECK(free_vars(ce.formula).empty());
  CHECK_FALSE(ce.assignment.empty());

  CHECK_THROWS_AS(check_equiv(P("q(x)"), P("q(y)")), DomainError);
}

TEST_CASE("class equality checking over the enumeration") {
  EnumConfig cfg;
  cfg.max_size = 5;
  Verdict split = check_class_equality({ClassFamily::E, 1}, {ClassFamily::U, 1}, cfg);
  REQUIRE(split.status == Verdict::Status::Refuted);
  CHECK(render(split.counterexample->formula) == "exists x. p");

  cfg.max_size = 6;
  CHECK(check_class_equality({ClassFamily::R, 1}, {ClassFamily::UPlus, 1}, cfg)
            .status == Verdict::Status::Pass);
  CHECK(check_class_equality({ClassFamily::BPlus, 1}, {ClassFamily::FPlus, 1}, cfg)
            .status == Verdict::Status::Pass);
}

TEST_CASE("generators are deterministic and land in their class") {
  GenConfig cfg;
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    Rng a(seed), b(seed);
    for (int k : {1, 2}) {
      FormulaPtr e = gen_eplus(a, cfg, k, true);
      CHECK(equal(e, gen_eplus(b, cfg, k, true)));
      CHECK(in_class(e, {ClassFamily::EPlus, k}));
      CHECK(free_vars(e).empty());
      FormulaPtr u = gen_uplus(a, cfg, k, false);
      CHECK(equal(u, gen_uplus(b, cfg, k, false)));
      CHECK(in_class(u, {ClassFamily::UPlus, k}));
      FormulaPtr s = gen_prenex(a, cfg, ClassFamily::Sigma, k, true);
      CHECK(equal(s, gen_prenex(b, cfg, ClassFamily::Sigma, k, true)));
      CHECK(in_class(s, {ClassFamily::Sigma, k}));
      FormulaPtr qf = gen_qf(a, cfg, {});
      CHECK(is_quantifier_free(qf));
      CHECK(free_vars(qf).empty());
      gen_qf(b, cfg, {});
    }
  }
}

TEST_CASE("the seed comes from the environment when set") {
  unsetenv("HIERARCHY_LAB_SEED");
  std::uint64_t fixed = default_seed();
  CHECK(fixed == default_seed());
  setenv("HIERARCHY_LAB_SEED", "12345", 1);
  CHECK(default_seed() == 12345);
  unsetenv("HIERARCHY_LAB_SEED");
  CHECK(default_seed() == fixed);
}

TEST_CASE("validation suites run clean at reduced budgets") {
  CHECK(suite_names().size() == 8);
  SuiteOptions opt;
  opt.max_size = 5;
  for (const char* name :
       {"class-equalities", "qf-dollar-lemma", "dual-involution"}) {
    SuiteReport rep = run_suite(name, opt);
    CHECK(rep.suite == name);
    CHECK(rep.checked > 0);
    CHECK(rep.failures.empty());
  }
  opt.max_size = 40;
  for (const char* name :
       {"a-collapse", "kurahashi", "fv-preservation", "witness-directions",
        "prenex-contracts"}) {
    SuiteReport rep = run_suite(name, opt);
    CHECK(rep.suite == name);
    CHECK(rep.checked > 0);
    CHECK(rep.failures.empty());
  }
  CHECK_THROWS_AS(run_suite("unheard-of"), DomainError);
}

TEST_CASE("suite reports serialize to the published shape") {
  SuiteOptions opt;
  opt.max_size = 4;
  SuiteReport rep = run_suite("class-equalities", opt);
  nlohmann::json j = nlohmann::json::parse(suite_report_to_json(rep));
  CHECK(j["suite"] == "class-equalities");
  CHECK(j["checked"] == 3 + 12 + 75 + 516);
  CHECK(j["failures"].is_array());
  CHECK(j["failures"].empty());
}
