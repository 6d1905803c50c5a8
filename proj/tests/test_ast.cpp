#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "hlab/ast.hpp"
#include "hlab/json_io.hpp"

using namespace hlab;

namespace {
FormulaPtr P(const std::string& s) { return parse_formula(s); }
}  // namespace

TEST_CASE("parsing atoms and precedence") {
  CHECK(equal(P("bot"), mk_bot()));
  CHECK(equal(P("$"), mk_placeholder()));
  CHECK(equal(P("p"), mk_prime("p")));
  CHECK(equal(P("q(x)"), mk_prime("q", {tvar("x")})));
  CHECK(equal(P("x = 0"), mk_prime("eq", {tvar("x"), tzero()})));
  CHECK(equal(P("x <= y"), mk_prime("le", {tvar("x"), tvar("y")})));

  // -> is right associative and binds loosest; /\ binds tighter than \/.
  CHECK(equal(P("p -> q -> r(0)"),
              mk_implies(mk_prime("p"),
                         mk_implies(mk_prime("q"), mk_prime("r", {tzero()})))));
  CHECK(equal(P("p \\/ q /\\ r(0)"),
              mk_or(mk_prime("p"), mk_and(mk_prime("q"), mk_prime("r", {tzero()})))));
  CHECK(equal(P("~p \\/ q"), mk_or(mk_not(mk_prime("p")), mk_prime("q"))));
}

TEST_CASE("quantifiers take maximal right scope") {
  CHECK(equal(P("exists x. x = 0"), mk_exists("x", mk_prime("eq", {tvar("x"), tzero()}))));
  CHECK(equal(P("forall x. $ -> p"),
              mk_forall("x", mk_implies(mk_placeholder(), mk_prime("p")))));
  // Multi-binder heads expand to nested single binders.
  CHECK(equal(P("forall x y. p"), mk_forall("x", mk_forall("y", mk_prime("p")))));
  // Quantifiers are also accepted directly after a connective.
  CHECK(equal(P("p -> forall x. q(x) \\/ p"),
              mk_implies(mk_prime("p"),
                         mk_forall("x", mk_or(mk_prime("q", {tvar("x")}), mk_prime("p"))))));
  CHECK(equal(P("~exists x. p"), mk_not(mk_exists("x", mk_prime("p")))));
}

TEST_CASE("terms parse with the usual precedence") {
  CHECK(equal(parse_term("S x + y * 0"),
              tplus(tsucc(tvar("x")), ttimes(tvar("y"), tzero()))));
  CHECK(equal(parse_term("S(x)"), tsucc(tvar("x"))));
  CHECK(equal(parse_term("(x + y) * x"), ttimes(tplus(tvar("x"), tvar("y")), tvar("x"))));
}

TEST_CASE("negation is sugar for implication into bot") {
  FormulaPtr f = P("~p");
  CHECK(f->kind == FormulaKind::Implies);
  CHECK(f->rhs->kind == FormulaKind::Bot);
  CHECK(is_not(f));
  CHECK_FALSE(is_not(P("p -> q")));
  CHECK(render(f) == "~p");
}

TEST_CASE("rendering goldens") {
  CHECK(render(mk_forall("x", mk_or(mk_prime("p"), mk_placeholder()))) ==
        "forall x. p \\/ $");
  // An implication body keeps explicit parens.
  CHECK(render(P("exists x. p -> q")) == "exists x. (p -> q)");
  // A quantifier in operand position is parenthesized.
  CHECK(render(P("(exists x. p) -> bot")) == "~(exists x. p)");
  CHECK(render(P("p /\\ (q \\/ p)")) == "p /\\ (q \\/ p)");
  CHECK(render(mk_not(mk_not(mk_prime("p")))) == "~~p");
  CHECK(render(P("forall x y. p")) == "forall x y. p");
}

TEST_CASE("parse and render round-trip on tricky shapes") {
  const char* samples[] = {
      "p",
      "~(p /\\ q)",
      "exists x. (p -> q) \\/ ~p",
      "forall x. (q(x) -> exists y. q(y))",
      "((p -> $) -> $) -> $",
      "forall x y. q(x) /\\ q(y) -> bot",
      "S x + 0 * y = S S 0",
      "exists x. x <= S(x + y)",
      "~~forall x. ~~q(x)",
  };
  for (const char* s : samples) {
    FormulaPtr f = P(s);
    CHECK(equal(parse_formula(render(f)), f));
  }
}

TEST_CASE("node_count treats every atom as one node") {
  CHECK(node_count(P("p")) == 1);
  CHECK(node_count(P("~p")) == 3);
  CHECK(node_count(P("forall x. ~p")) == 4);
  CHECK(node_count(P("q(x) \\/ x = 0")) == 3);
}

TEST_CASE("free variables come out in first-occurrence order") {
  CHECK(free_vars(P("x = y /\\ q(z) /\\ x = 0")) ==
        std::vector<std::string>{"x", "y", "z"});
  // A bound occurrence does not shadow a later free occurrence of the
  // same name outside the binder.
  CHECK(free_vars(P("(exists x. p) -> x <= 0")) == std::vector<std::string>{"x"});
  CHECK(free_vars(P("forall x. x = y")) == std::vector<std::string>{"y"});
  CHECK(free_vars(P("forall x. q(x)")).empty());
}

TEST_CASE("substitution avoids capture by renaming the binder") {
  FormulaPtr f = substitute_term(P("forall x. x = y"), "y", tvar("x"));
  CHECK(render(f) == "forall x1. x1 = x");
  // No free occurrence: identity.
  FormulaPtr g = P("forall x. p");
  CHECK(equal(substitute_term(g, "x", tzero()), g));
}

TEST_CASE("placeholder substitution rejects capture") {
  FormulaPtr f = P("forall x. $ -> p");
  CHECK(equal(substitute_placeholder(f, P("q(y)")),
              P("forall x. q(y) -> p")));
  CHECK_THROWS_AS(substitute_placeholder(f, P("q(x)")), DomainError);
  try {
    substitute_placeholder(f, P("q(x)"));
  } catch (const DomainError& e) {
    std::string msg = e.what();
    CHECK(msg.find('x') != std::string::npos);
  }
}

TEST_CASE("universal closure quantifies free variables in order") {
  CHECK(render(universal_closure(P("x = y"))) == "forall x y. x = y");
  CHECK(render(universal_closure(P("q(x) \\/ forall y. r(y, y)"))) ==
        "forall x. q(x) \\/ (forall y. r(y, y))");
  FormulaPtr closed = P("forall x. q(x)");
  CHECK(equal(universal_closure(closed), closed));
}

TEST_CASE("fresh_name skips every occurring name") {
  CHECK(fresh_name("x", {"x", "x1", "x2"}) == "x3");
  CHECK(fresh_name("z", {}) == "z1");
}

TEST_CASE("signatures control which identifiers are predicates") {
  Signature sig = Signature::standard();
  CHECK(sig.knows("p", 0));
  CHECK(sig.knows("q", 1));
  CHECK(sig.knows("r", 2));
  // The standard letters carry several arities at once.
  CHECK(equal(parse_formula("p /\\ p(x)", sig),
              mk_and(mk_prime("p"), mk_prime("p", {tvar("x")}))));
  CHECK_THROWS_AS(parse_formula("p(x, y, w)", sig), ParseError);

  Signature custom;
  custom.declare("edge", 2);
  CHECK(equal(parse_formula("edge(x, y)", custom),
              mk_prime("edge", {tvar("x"), tvar("y")})));
  // Unknown identifiers are term variables, so a bare one is not a formula.
  CHECK_THROWS_AS(parse_formula("p", custom), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_formula("exists x. (");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 12);
    CHECK(std::string(e.what()).find("parse error at 1:12") == 0);
  }
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("forall. p"), ParseError);
}

TEST_CASE("json wire format round-trips") {
  const char* samples[] = {
      "bot", "$", "q(S x + 0)", "p -> q \\/ ~p", "forall x. exists y. x <= y",
  };
  for (const char* s : samples) {
    FormulaPtr f = P(s);
    CHECK(equal(formula_from_json(formula_to_json(f)), f));
  }
  CHECK(formula_to_json(P("exists x. p")).dump() ==
        R"({"b":{"args":[],"k":"prime","p":"p"},"k":"ex","v":"x"})");
  CHECK_THROWS_AS(formula_from_json(nlohmann::json{{"k", "mystery"}}), DomainError);
}
