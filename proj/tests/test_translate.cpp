#include <string>

#include "doctest.h"
#include "hlab/ast.hpp"
#include "hlab/translate.hpp"

using namespace hlab;

namespace {
FormulaPtr P(const std::string& s) { return parse_formula(s); }
}  // namespace

TEST_CASE("placeholder translation goldens") {
  CHECK(render(dollar_translate(P("p"))) == "(p -> $) -> $");
  CHECK(render(dollar_translate(P("exists x. p"))) ==
        "((exists x. ((p -> $) -> $)) -> $) -> $");
  CHECK(equal(dollar_translate(mk_bot()), mk_placeholder()));
  // Conjunction, implication and forall commute with the translation.
  CHECK(render(dollar_translate(P("p /\\ forall x. q(x)"))) ==
        "((p -> $) -> $) /\\ (forall x. ((q(x) -> $) -> $))");
  CHECK(render(dollar_translate(P("p -> q"))) ==
        "((p -> $) -> $) -> (q -> $) -> $");
  // Disjunction gets the same double wrapper as exists.
  CHECK(render(dollar_translate(P("p \\/ q"))) ==
        "(((p -> $) -> $) \\/ ((q -> $) -> $) -> $) -> $");
  CHECK_THROWS_AS(dollar_translate(P("$ -> p")), DomainError);
}

TEST_CASE("prime-disjunction translation goldens") {
  CHECK(equal(a_translate(P("forall x. (p -> bot)")),
              P("forall x. (p \\/ $ -> bot \\/ $)")));
  CHECK(equal(a_translate(P("exists x. q(x)")), P("exists x. q(x) \\/ $")));
  CHECK_THROWS_AS(a_translate(P("p \\/ $")), DomainError);
}

TEST_CASE("substituting bot and collapsing recovers the input") {
  for (const char* s : {"p", "~q(x)", "exists x. (q(x) -> forall y. q(y))",
                        "p /\\ (q \\/ p)"}) {
    FormulaPtr f = P(s);
    FormulaPtr back = simplify_or_bot(substitute_placeholder(a_translate(f), mk_bot()));
    CHECK(equal(back, f));
  }
}

TEST_CASE("or-bot simplifier rewrites only bot disjuncts") {
  CHECK(equal(simplify_or_bot(P("p \\/ bot")), P("p")));
  CHECK(equal(simplify_or_bot(P("bot \\/ (q(x) \\/ bot)")), P("q(x)")));
  FormulaPtr f = P("p \\/ q");
  CHECK(equal(simplify_or_bot(f), f));
  // Rewriting is bottom-up, so a redex exposed by a child rewrite fires too.
  CHECK(equal(simplify_or_bot(P("p \\/ (bot \\/ bot)")), P("p")));
  CHECK(equal(simplify_or_bot(P("p -> bot")), P("~p")));
}

TEST_CASE("double-negation translation goldens") {
  CHECK(equal(kuroda_translate(P("forall x. p")), P("~~forall x. ~~p")));
  CHECK(equal(kuroda_translate(P("exists x. p")), P("~~exists x. p")));
  CHECK(equal(kuroda_translate(P("p -> q")), P("~~(p -> q)")));
  CHECK(equal(kuroda_translate(P("forall x y. q(x)")),
              P("~~forall x. ~~forall y. ~~q(x)")));
}

TEST_CASE("prenex dual flips the prefix and negates the matrix") {
  CHECK(equal(dual(P("forall x. exists y. p")), P("exists x. forall y. ~p")));
  CHECK(equal(dual(dual(P("exists x. p"))), P("exists x. ~~p")));
  CHECK(equal(dual(P("p /\\ q")), P("~(p /\\ q)")));
  CHECK_THROWS_AS(dual(P("p -> forall x. q(x)")), DomainError);
}

TEST_CASE("scheme instances") {
  SchemePayload one{{P("exists x. p")}, std::nullopt};
  CHECK(equal(scheme_instance(SchemeId::LEM, one),
              P("(exists x. p) \\/ ~(exists x. p)")));
  CHECK(equal(scheme_instance(SchemeId::DNE, one),
              P("~~(exists x. p) -> exists x. p")));

  SchemePayload dns{{P("q(x)")}, "x"};
  CHECK(equal(scheme_instance(SchemeId::DNS, dns),
              P("(forall x. ~~q(x)) -> ~~forall x. q(x)")));

  SchemePayload cd{{P("exists y. p"), P("q(x)")}, "x"};
  CHECK(equal(scheme_instance(SchemeId::CD, cd),
              P("(forall x. (exists y. p) \\/ q(x)) -> (exists y. p) \\/ forall x. q(x)")));
  SchemePayload cd_bad{{P("q(x)"), P("p")}, "x"};
  CHECK_THROWS_AS(scheme_instance(SchemeId::CD, cd_bad), DomainError);

  SchemePayload two{{P("p"), P("q")}, std::nullopt};
  CHECK(equal(scheme_instance(SchemeId::DML, two),
              P("~(p /\\ q) -> ~p \\/ ~q")));

  SchemePayload duals{{P("exists x. p"), P("forall y. q")}, std::nullopt};
  CHECK(equal(scheme_instance(SchemeId::DMLDual, duals),
              P("~((exists x. p) /\\ (forall y. q)) -> (forall x. ~p) \\/ (exists y. ~q)")));
  SchemePayload nonprenex{{P("p -> exists x. q(x)"), P("p")}, std::nullopt};
  CHECK_THROWS_AS(scheme_instance(SchemeId::DMLDual, nonprenex), DomainError);

  SchemePayload eq{{P("x = 0")}, std::nullopt};
  CHECK(equal(scheme_instance(SchemeId::DNEC, eq),
              P("(forall x. ~~x = 0) -> forall x. x = 0")));
  CHECK(equal(scheme_instance(SchemeId::DNSC, eq),
              P("(forall x. ~~x = 0) -> ~~forall x. x = 0")));

  // Arity and variable checks are enforced per scheme.
  CHECK_THROWS_AS(scheme_instance(SchemeId::LEM, two), DomainError);
  CHECK_THROWS_AS(scheme_instance(SchemeId::DNS, one), DomainError);
  CHECK_THROWS_AS(scheme_instance(SchemeId::LEM, SchemePayload{{P("p")}, "x"}),
                  DomainError);
  CHECK_THROWS_AS(scheme_instance(SchemeId::DNERInstance, one), DomainError);
}

TEST_CASE("premise-conclusion rule instance") {
  auto [premise, conclusion] = dner_instance(P("exists x. p"));
  CHECK(equal(premise, P("~~exists x. p")));
  CHECK(equal(conclusion, P("exists x. p")));
}

TEST_CASE("scheme names resolve case-insensitively") {
  CHECK(scheme_from_name("lem") == SchemeId::LEM);
  CHECK(scheme_from_name("DMLDual") == SchemeId::DMLDual);
  CHECK(scheme_from_name("DMLDUAL") == SchemeId::DMLDual);
  CHECK_FALSE(scheme_from_name("nope").has_value());
  CHECK(scheme_name(SchemeId::DNSC) == "DNSC");
}
