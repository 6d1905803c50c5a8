#include <set>
#include <string>

#include "doctest.h"
#include "hlab/ast.hpp"
#include "hlab/hierarchy.hpp"

using namespace hlab;

namespace {
FormulaPtr P(const std::string& s) { return parse_formula(s); }
bool in(const std::string& s, ClassFamily f, int k) {
  return in_class(P(s), {f, k});
}
}  // namespace

TEST_CASE("alternation paths") {
  CHECK(alt_paths(P("p")) == std::set<AltPath>{""});
  CHECK(alt_paths(P("exists x. forall y. p")) == std::set<AltPath>{"+-"});
  // An antecedent flips every path; bot contributes the empty path.
  CHECK(alt_paths(P("(exists x. forall y. p) -> bot")) ==
        std::set<AltPath>{"-+", ""});
  CHECK(alt_paths(P("(forall x. p) -> exists y. q")) == std::set<AltPath>{"+"});
  CHECK(alt_paths(P("(forall x. p) /\\ (exists y. q)")) ==
        std::set<AltPath>{"-", "+"});
  // A quantifier extends only paths of the opposite polarity.
  CHECK(alt_paths(P("forall x. forall y. p")) == std::set<AltPath>{"-"});
}

TEST_CASE("degree is the longest alternation path") {
  CHECK(degree(P("q(x)")) == 0);
  CHECK(degree(P("exists x. forall y. p")) == 2);
  CHECK(degree(P("(forall x. p) -> exists y. q")) == 1);
  CHECK(is_quantifier_free(P("~(p /\\ x = 0)")));
  CHECK_FALSE(is_quantifier_free(P("exists x. p")));
}

TEST_CASE("path-based class membership") {
  CHECK(in("exists x. x = 0", ClassFamily::Sigma, 1));
  CHECK_FALSE(in("exists x. forall y. p", ClassFamily::U, 2));
  CHECK(in("exists x. forall y. p", ClassFamily::E, 2));
  CHECK(in("p /\\ q", ClassFamily::F, 0));
  // Cumulative variants absorb lower one-sided ranks, strict ones do not.
  CHECK(in("exists x. p", ClassFamily::EPlus, 2));
  CHECK_FALSE(in("exists x. p", ClassFamily::E, 2));
  CHECK(in("exists x. p", ClassFamily::UPlus, 2));
  CHECK_FALSE(in("exists x. p", ClassFamily::UPlus, 1));
  // Negative rank denotes the empty class.
  CHECK_FALSE(in("p", ClassFamily::Sigma, -1));
}

TEST_CASE("inductive class membership") {
  CHECK(in("(exists x. p) -> forall y. q", ClassFamily::R, 1));
  CHECK_FALSE(in("exists x. p", ClassFamily::R, 1));
  CHECK(in("exists x. p", ClassFamily::J, 1));
  CHECK(in("forall x. (q(x) -> exists y. q(y))", ClassFamily::R, 2));
  CHECK_FALSE(in("forall x. (q(x) -> exists y. q(y))", ClassFamily::J, 2));
  // Q collapses an implication chain earlier than R does.
  CHECK(in("exists x. forall y. p", ClassFamily::Q, 1));
  CHECK(in("exists x. forall y. p", ClassFamily::V, 2));
}

TEST_CASE("disjunction and quantifier closures of the prenex classes") {
  CHECK(in("forall x. (p \\/ q(x))", ClassFamily::Pi, 1));
  CHECK(in("forall x. (p \\/ q(x))", ClassFamily::EPi, 1));
  CHECK(in("forall x. (p \\/ q(x))", ClassFamily::U, 1));
  CHECK(in("(forall x. q(x)) \\/ (forall y. q(y))", ClassFamily::EPi, 1));
  CHECK(in("(forall x. q(x)) \\/ (forall y. q(y))", ClassFamily::VeePi, 1));
  CHECK_FALSE(in("p", ClassFamily::EPi, 1));
  CHECK(in("exists x. (forall y. p) \\/ (forall z. q)", ClassFamily::ESigma, 2));
  // The leading block of an ESigma member may be empty.
  CHECK(in("(forall y. p) \\/ (forall z. q)", ClassFamily::ESigma, 2));
  CHECK(in("((forall x. p) -> exists y. q) /\\ (exists z. p)", ClassFamily::BPlus, 1));
}

TEST_CASE("prenex recognition and block words") {
  CHECK(is_prenex(P("p /\\ q")));
  CHECK(is_prenex(P("exists x. forall y. x <= y")));
  CHECK_FALSE(is_prenex(P("exists x. (p -> forall y. q)")));
  CHECK(prenex_word(P("p")) == std::string(""));
  CHECK(prenex_word(P("exists x y. forall w. p")) == std::string("+-"));
  CHECK(prenex_word(P("~forall x. p")) == std::nullopt);
  CHECK(prenex_word(P("forall x. exists y. forall w. p")) == std::string("-+-"));
}

TEST_CASE("padding embeds prenex formulas into strict classes") {
  CHECK(render(pad_to(P("forall y. p"), {ClassFamily::Sigma, 2})) ==
        "exists z1. forall y. p");
  CHECK(render(pad_to(P("p"), {ClassFamily::Pi, 2})) == "forall z1. exists z2. p");
  FormulaPtr f = P("exists x. p");
  CHECK(equal(pad_to(f, {ClassFamily::Sigma, 1}), f));
  // Pad names skip every name occurring in the input.
  CHECK(render(pad_to(P("forall z1. p"), {ClassFamily::Sigma, 2})) ==
        "exists z2. forall z1. p");
  CHECK_THROWS_AS(pad_to(P("p -> forall x. q(x)"), {ClassFamily::Pi, 2}), DomainError);
  CHECK_THROWS_AS(pad_to(P("exists x. forall y. p"), {ClassFamily::Pi, 2}), DomainError);
  for (int k : {1, 2, 3}) {
    CHECK(in_class(pad_to(P("p \\/ q"), {ClassFamily::Sigma, k}), {ClassFamily::Sigma, k}));
    CHECK(in_class(pad_to(P("p \\/ q"), {ClassFamily::Pi, k}), {ClassFamily::Pi, k}));
  }
}

TEST_CASE("classify report lists minimal ranks under the cap") {
  ClassifyReport rep = classify_report(P("exists x. forall y. p"));
  CHECK(rep.degree == 2);
  CHECK(rep.paths == std::vector<AltPath>{"+-"});
  CHECK(rep.cap == 4);
  auto minimum = [&](ClassFamily f) {
    for (const auto& [fam, rank] : rep.minima)
      if (fam == f) return rank;
    return std::optional<int>{};
  };
  CHECK(minimum(ClassFamily::Sigma) == 2);
  CHECK(minimum(ClassFamily::E) == 2);
  CHECK(minimum(ClassFamily::F) == 2);
  CHECK(minimum(ClassFamily::UPlus) == 3);
  CHECK(minimum(ClassFamily::Q) == 1);
  CHECK_FALSE(minimum(ClassFamily::Pi).has_value());
  CHECK_FALSE(minimum(ClassFamily::U).has_value());
  CHECK(rep.minima.size() == all_families().size());
}

TEST_CASE("family names round-trip") {
  for (ClassFamily f : all_families()) {
    auto back = family_from_name(family_name(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK_FALSE(family_from_name("Delta").has_value());
}
