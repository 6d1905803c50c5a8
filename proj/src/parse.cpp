#include "hlab/ast.hpp"

#include <cctype>
#include <vector>

namespace hlab {

namespace {

enum class Tok { Ident, Num, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string t, int l, int c) {
    out.push_back({k, std::move(t), l, c});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    int l = line, co = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_'))
        ++j;
      push(Tok::Ident, src.substr(i, j - i), l, co);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Tok::Num, src.substr(i, j - i), l, co);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "->" || two == "/\\" || two == "\\/" || two == "<=") {
      push(Tok::Sym, two, l, co);
      i += 2;
      col += 2;
      continue;
    }
    if (c == '(' || c == ')' || c == ',' || c == '.' || c == '=' || c == '~' ||
        c == '+' || c == '*' || c == '$') {
      push(Tok::Sym, std::string(1, c), l, co);
      ++i;
      ++col;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, co);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "bot" || s == "S";
}

struct Parser {
  const std::vector<Token>& toks;
  const Signature& sig;
  std::size_t pos = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " (at end of input)"
                                               : " (near '" + t.text + "')"),
                     t.line, t.col);
  }

  bool at_sym(const std::string& s) const {
    return peek().kind == Tok::Sym && peek().text == s;
  }

  bool at_word(const std::string& s) const {
    return peek().kind == Tok::Ident && peek().text == s;
  }

  bool accept_sym(const std::string& s) {
    if (!at_sym(s)) return false;
    ++pos;
    return true;
  }

  void expect_sym(const std::string& s) {
    if (!accept_sym(s)) fail("expected '" + s + "'");
  }

  FormulaPtr formula() {
    if (at_word("forall") || at_word("exists")) return quantified();
    return implication();
  }

  FormulaPtr quantified() {
    bool uni = peek().text == "forall";
    ++pos;
    std::vector<std::string> vars;
    while (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
      if (sig.knows(peek().text))
        fail("cannot bind predicate symbol '" + peek().text + "'");
      vars.push_back(peek().text);
      ++pos;
    }
    if (vars.empty()) fail("expected at least one bound variable");
    expect_sym(".");
    FormulaPtr body = formula();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = uni ? mk_forall(*it, body) : mk_exists(*it, body);
    return body;
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (accept_sym("->")) return mk_implies(lhs, formula());
    return lhs;
  }

  // A quantifier may follow \/, /\ and ~ without parentheses; its body
  // then extends as far right as possible, so it is always the final
  // operand of the surrounding chain.
  bool at_quantifier() { return at_word("forall") || at_word("exists"); }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (accept_sym("\\/")) {
      if (at_quantifier()) return mk_or(f, quantified());
      f = mk_or(f, conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = negation();
    while (accept_sym("/\\")) {
      if (at_quantifier()) return mk_and(f, quantified());
      f = mk_and(f, negation());
    }
    return f;
  }

  FormulaPtr negation() {
    if (accept_sym("~")) {
      if (at_quantifier()) return mk_not(quantified());
      return mk_not(negation());
    }
    return atom();
  }

  FormulaPtr atom() {
    const Token& t = peek();
    if (at_word("bot")) {
      ++pos;
      return mk_bot();
    }
    if (accept_sym("$")) return mk_placeholder();
    if (at_word("forall") || at_word("exists"))
      fail("quantifier must be parenthesized in this position");
    if (t.kind == Tok::Ident && !is_keyword(t.text)) {
      if (sig.knows(t.text)) return predicate_atom();
      if (peek(1).kind == Tok::Sym && peek(1).text == "(")
        fail("unknown predicate symbol '" + t.text + "'");
      return relational_atom();
    }
    if (t.kind == Tok::Num || at_word("S")) return relational_atom();
    if (at_sym("(")) {
      // A parenthesis opens either a compound formula or the left term
      // of a comparison. Try the term reading first and fall back.
      std::size_t save = pos;
      try {
        return relational_atom();
      } catch (const ParseError&) {
        pos = save;
      }
      expect_sym("(");
      FormulaPtr f = formula();
      expect_sym(")");
      return f;
    }
    fail("expected a formula");
  }

  FormulaPtr predicate_atom() {
    std::string name = peek().text;
    int line = peek().line, col = peek().col;
    ++pos;
    std::vector<TermPtr> args;
    if (accept_sym("(")) {
      args.push_back(term());
      while (accept_sym(",")) args.push_back(term());
      expect_sym(")");
    }
    if (!sig.knows(name, static_cast<int>(args.size()))) {
      std::string declared;
      for (int a : sig.arities(name)) {
        if (!declared.empty()) declared += "/";
        declared += std::to_string(a);
      }
      throw ParseError("predicate '" + name + "' is declared at arity " + declared +
                           ", got " + std::to_string(args.size()) + " argument(s)",
                       line, col);
    }
    return mk_prime(name, std::move(args));
  }

  FormulaPtr relational_atom() {
    TermPtr lhs = term();
    if (accept_sym("=")) return mk_prime("eq", {lhs, term()});
    if (accept_sym("<=")) return mk_prime("le", {lhs, term()});
    fail("expected '=' or '<=' after term");
  }

  TermPtr term() {
    TermPtr t = factor();
    while (accept_sym("+")) t = tplus(t, factor());
    return t;
  }

  TermPtr factor() {
    TermPtr t = unary();
    while (accept_sym("*")) t = ttimes(t, unary());
    return t;
  }

  TermPtr unary() {
    if (at_word("S")) {
      ++pos;
      return tsucc(unary());
    }
    return primary();
  }

  TermPtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Num) {
      if (t.text != "0") fail("the only numeral is 0 (build others with S)");
      ++pos;
      return tzero();
    }
    if (t.kind == Tok::Ident && !is_keyword(t.text)) {
      if (sig.knows(t.text))
        fail("predicate symbol '" + t.text + "' used in term position");
      ++pos;
      return tvar(t.text);
    }
    if (accept_sym("(")) {
      TermPtr inner = term();
      expect_sym(")");
      return inner;
    }
    fail("expected a term");
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Signature& sig) {
  auto toks = tokenize(text);
  Parser p{toks, sig};
  FormulaPtr f = p.formula();
  if (p.peek().kind != Tok::End) p.fail("trailing input after formula");
  return f;
}

TermPtr parse_term(const std::string& text) {
  auto toks = tokenize(text);
  Parser p{toks, Signature::standard()};
  TermPtr t = p.term();
  if (p.peek().kind != Tok::End) p.fail("trailing input after term");
  return t;
}

}  // namespace hlab
