// hlab: command line front end for the hierarchy lab library.
//
//   hlab classify "exists x. forall y. p"
//   hlab translate --kind dollar "exists x. p"
//   hlab prenex --rank 2 --class E "exists x. p \/ forall y. q(y)"
//   hlab witness --lemma u-epi --rank 1 "forall x. q(x)"
//   hlab scheme --name CD --var x "q(y)" "q(x)"
//   hlab enumerate --max-size 4
//   hlab check --suite class-equalities --max-size 7
//
// Results go to standard out, diagnostics to standard error. Exit code
// 0 on success, 1 on domain errors (input outside an operation's
// precondition, suite failures), 2 on usage errors (bad flags, formula
// syntax, unreadable files). Runs are deterministic; the environment
// variable HIERARCHY_LAB_SEED overrides the seed of every randomized
// component.

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "hlab/ast.hpp"
#include "hlab/hierarchy.hpp"
#include "hlab/json_io.hpp"
#include "hlab/normalize.hpp"
#include "hlab/oracle.hpp"
#include "hlab/translate.hpp"

namespace {

using nlohmann::json;

// Shown on usage errors alongside the flag diagnostics.
constexpr const char* kGrammar =
    "formula syntax:\n"
    "  formula := quant | impl\n"
    "  impl    := disj (\"->\" impl)?\n"
    "  disj    := conj (\"\\/\" conj)*\n"
    "  conj    := neg (\"/\\\" neg)*\n"
    "  neg     := \"~\" neg | atom\n"
    "  atom    := \"bot\" | \"$\" | ident \"(\" term (\",\" term)* \")\"\n"
    "           | term (\"=\" | \"<=\") term | \"(\" formula \")\"\n"
    "  quant   := (\"forall\" | \"exists\") ident+ \".\" formula\n"
    "  term    := factor (\"+\" factor)*\n"
    "  factor  := unary (\"*\" unary)*\n"
    "  unary   := \"S\" unary | \"0\" | ident | \"(\" term \")\"\n";

// Invocation problems found after flag parsing: missing or duplicated
// formula payload, unreadable --sig / --file arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Options shared by more than one subcommand. Only one subcommand runs
// per invocation, so a single instance serves them all.
struct CommonFlags {
  std::string format;   // "text" | "json"; empty keeps the command default
  std::string sig_path;
  std::string file_path;
  std::string formula;
};

hlab::Signature load_signature(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open signature file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("signature file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("predicates") || !j["predicates"].is_object())
    throw UsageError("signature file " + path +
                     ": expected {\"predicates\": {\"name\": [arities]}}");
  // The listed symbols replace the standard ones; eq and le stay builtin.
  hlab::Signature sig;
  for (const auto& [name, arities] : j["predicates"].items()) {
    if (!arities.is_array())
      throw UsageError("signature file " + path + ": arities of '" + name +
                       "' must be an array");
    for (const auto& a : arities) {
      if (!a.is_number_unsigned())
        throw UsageError("signature file " + path + ": arity of '" + name +
                         "' must be a non-negative integer");
      sig.declare(name, a.get<int>());
    }
  }
  return sig;
}

std::vector<std::pair<int, std::string>> read_batch_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open batch file: " + path);
  std::vector<std::pair<int, std::string>> lines;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(line_no, line);
  }
  if (lines.empty()) throw UsageError("batch file holds no formulas: " + path);
  return lines;
}

// Runs act on the inline formula or on every batch line. A failing
// batch line is reported with its line number before the error itself
// propagates; processing stops at the first failure.
void for_each_parsed(const CommonFlags& c, const hlab::Signature& sig,
                     const std::function<void(const hlab::FormulaPtr&)>& act) {
  if (!c.file_path.empty() && !c.formula.empty())
    throw UsageError("give a formula either inline or via --file, not both");
  if (c.file_path.empty()) {
    if (c.formula.empty()) throw UsageError("missing formula (inline argument or --file)");
    act(hlab::parse_formula(c.formula, sig));
    return;
  }
  for (const auto& [line_no, text] : read_batch_lines(c.file_path)) {
    try {
      act(hlab::parse_formula(text, sig));
    } catch (const std::exception&) {
      std::cerr << c.file_path << " line " << line_no << ":\n";
      throw;
    }
  }
}

std::string class_text(const hlab::ClassId& c) {
  return hlab::family_name(c.family) + "_" + std::to_string(c.rank);
}

json class_json(const hlab::ClassId& c) {
  return {{"family", hlab::family_name(c.family)}, {"rank", c.rank}};
}

void emit_formula(const hlab::FormulaPtr& f, bool json_out) {
  if (json_out)
    std::cout << hlab::formula_to_json(f).dump() << "\n";
  else
    std::cout << hlab::render(f) << "\n";
}

void emit_classify(const hlab::FormulaPtr& f, int cap, bool json_out) {
  hlab::ClassifyReport rep = hlab::classify_report(f, cap);
  if (json_out) {
    json classes = json::object();
    for (const auto& [family, rank] : rep.minima)
      if (rank) classes[hlab::family_name(family)] = *rank;
    json out = {{"degree", rep.degree},
                {"alt", rep.paths},
                {"cap", rep.cap},
                {"classes", classes}};
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "degree: " << rep.degree << "\n";
  std::cout << "paths:";
  for (const auto& p : rep.paths) std::cout << " " << (p.empty() ? "(empty)" : p);
  std::cout << "\n";
  for (const auto& [family, rank] : rep.minima)
    if (rank) std::cout << hlab::family_name(family) << ": " << *rank << "\n";
}

void emit_witness(const hlab::WitnessResult& w, bool json_out) {
  if (json_out) {
    json out = {{"witness", hlab::formula_to_json(w.witness)},
                {"target_class", class_json(w.target_class)},
                {"forward_over", w.forward_over},
                {"backward_over", w.backward_over}};
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "witness: " << hlab::render(w.witness) << "\n"
            << "target_class: " << class_text(w.target_class) << "\n"
            << "forward_over: " << w.forward_over << "\n"
            << "backward_over: " << w.backward_over << "\n";
}

void emit_pair(const hlab::FormulaPtr& pos, const hlab::FormulaPtr& neg,
               bool json_out) {
  if (json_out) {
    json out = {{"pos", hlab::formula_to_json(pos)},
                {"neg", hlab::formula_to_json(neg)}};
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "pos: " << hlab::render(pos) << "\n"
            << "neg: " << hlab::render(neg) << "\n";
}

int run_translate(const CommonFlags& c, const hlab::Signature& sig,
                  const std::string& kind, bool json_out) {
  for_each_parsed(c, sig, [&](const hlab::FormulaPtr& f) {
    hlab::FormulaPtr g;
    if (kind == "dollar")
      g = hlab::dollar_translate(f);
    else if (kind == "a")
      g = hlab::a_translate(f);
    else if (kind == "kuroda")
      g = hlab::kuroda_translate(f);
    else
      g = hlab::dual(f);
    emit_formula(g, json_out);
  });
  return 0;
}

int run_prenex(const CommonFlags& c, const hlab::Signature& sig, int rank,
               const std::string& klass, bool json_out) {
  for_each_parsed(c, sig, [&](const hlab::FormulaPtr& f) {
    hlab::WitnessResult w =
        klass.empty()
            ? hlab::prenex_in_class(f, rank)
            : hlab::prenex_in_class(f, rank,
                                    klass == "E" ? hlab::ClassFamily::E
                                                 : hlab::ClassFamily::U);
    emit_witness(w, json_out);
  });
  return 0;
}

// --rank names the class rank of the input; the constructors count
// from the rank below (their witness lands one level up from it).
int run_witness(const CommonFlags& c, const hlab::Signature& sig,
                const std::string& lemma, int rank, bool json_out) {
  for_each_parsed(c, sig, [&](const hlab::FormulaPtr& f) {
    if (lemma == "b-decompose") {
      auto [pos, neg] = hlab::b_decompose(f, rank);
      emit_pair(pos, neg, json_out);
      return;
    }
    hlab::WitnessResult w;
    if (lemma == "u-epi")
      w = hlab::u_witness_epi(f, rank - 1);
    else if (lemma == "e-epi-neg")
      w = hlab::e_neg_witness_epi(f, rank - 1);
    else if (lemma == "u-esigma-neg")
      w = hlab::u_neg_witness_esigma(f, rank - 1);
    else if (lemma == "e-esigma")
      w = hlab::e_witness_esigma(f, rank - 1);
    else if (lemma == "sigma-pos")
      w = hlab::witness_sigma(f, rank - 1, hlab::Polarity::Pos);
    else
      w = hlab::witness_sigma(f, rank - 1, hlab::Polarity::Neg);
    emit_witness(w, json_out);
  });
  return 0;
}

int run_scheme(const CommonFlags& c, const hlab::Signature& sig,
               const std::string& name, const std::vector<std::string>& payload,
               const std::string& var, bool json_out) {
  hlab::SchemeId id = *hlab::scheme_from_name(name);
  std::optional<std::string> var_opt;
  if (!var.empty()) var_opt = var;
  if (!c.file_path.empty()) {
    if (!payload.empty())
      throw UsageError("give payload formulas either inline or via --file, not both");
    for (const auto& [line_no, text] : read_batch_lines(c.file_path)) {
      try {
        hlab::SchemePayload p{{hlab::parse_formula(text, sig)}, var_opt};
        emit_formula(hlab::scheme_instance(id, p), json_out);
      } catch (const std::exception&) {
        std::cerr << c.file_path << " line " << line_no << ":\n";
        throw;
      }
    }
    return 0;
  }
  if (payload.empty()) throw UsageError("missing payload formula(s)");
  hlab::SchemePayload p;
  for (const auto& text : payload) p.formulas.push_back(hlab::parse_formula(text, sig));
  p.var = var_opt;
  emit_formula(hlab::scheme_instance(id, p), json_out);
  return 0;
}

int run_enumerate(int max_size, bool json_out) {
  hlab::EnumConfig cfg;
  cfg.max_size = max_size;
  hlab::enumerate_formulas(cfg, [&](const hlab::FormulaPtr& f) {
    emit_formula(f, json_out);
    return true;
  });
  return 0;
}

int run_check(const std::string& suite, int max_size, bool json_out) {
  hlab::SuiteOptions opt;
  opt.max_size = max_size;
  hlab::SuiteReport rep = hlab::run_suite(suite, opt);
  if (json_out) {
    std::cout << hlab::suite_report_to_json(rep) << "\n";
  } else {
    std::cout << rep.suite << ": checked=" << rep.checked
              << " failures=" << rep.failures.size()
              << (rep.failures.empty() ? " PASS" : " FAIL") << "\n";
    for (const auto& fail : rep.failures)
      std::cout << "  " << fail.formula << " | " << fail.assignment
                << " | bound=" << fail.bound << "\n";
  }
  return rep.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syntactic toolkit for arithmetical-hierarchy formula classes"};
  app.set_version_flag("--version", "hlab 0.1.0");
  app.require_subcommand(1);

  CommonFlags c;
  std::string kind, klass, lemma, scheme, suite, var;
  std::vector<std::string> payload;
  int rank = 0;
  int cap = 4;
  int enum_size = 5;
  int check_size = -1;

  auto add_common = [&](CLI::App* sub, bool takes_formulas) {
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (takes_formulas) {
      sub->add_option("--sig", c.sig_path, "signature file (JSON)");
      sub->add_option("--file", c.file_path, "batch file, one formula per line");
    }
  };

  CLI::App* classify =
      app.add_subcommand("classify", "report degree, alternation paths, and minimal classes");
  classify->add_option("formula", c.formula, "formula text");
  classify->add_option("--rank", cap, "largest rank probed per family")
      ->check(CLI::Range(0, 16));
  add_common(classify, true);

  CLI::App* translate = app.add_subcommand("translate", "apply a translation");
  translate->add_option("--kind", kind, "dollar | a | kuroda | dual")
      ->required()
      ->check(CLI::IsMember({"dollar", "a", "kuroda", "dual"}));
  translate->add_option("formula", c.formula, "formula text");
  add_common(translate, true);

  CLI::App* prenex =
      app.add_subcommand("prenex", "prenex a formula into a strict class");
  prenex->add_option("--rank", rank, "target rank k")
      ->required()
      ->check(CLI::Range(0, 32));
  prenex->add_option("--class", klass, "target side: E (Sigma_k) or U (Pi_k)")
      ->check(CLI::IsMember({"E", "U"}));
  prenex->add_option("formula", c.formula, "formula text");
  add_common(prenex, true);

  CLI::App* witness = app.add_subcommand(
      "witness", "build the constructive companion of a class member");
  witness
      ->add_option("--lemma", lemma,
                   "u-epi | e-epi-neg | u-esigma-neg | e-esigma | sigma-pos | "
                   "sigma-neg | b-decompose")
      ->required()
      ->check(CLI::IsMember({"u-epi", "e-epi-neg", "u-esigma-neg", "e-esigma",
                             "sigma-pos", "sigma-neg", "b-decompose"}));
  witness->add_option("--rank", rank, "class rank of the input")
      ->required()
      ->check(CLI::Range(1, 32));
  witness->add_option("formula", c.formula, "formula text");
  add_common(witness, true);

  CLI::App* scheme_cmd = app.add_subcommand("scheme", "instantiate a logical scheme");
  scheme_cmd
      ->add_option("--name", scheme,
                   "LEM | DNE | DNS | CD | DML | DMLDUAL | DNEC | DNSC")
      ->required()
      ->check(CLI::IsMember(
          {"LEM", "DNE", "DNS", "CD", "DML", "DMLDUAL", "DNEC", "DNSC"},
          CLI::ignore_case));
  scheme_cmd->add_option("--var", var, "bound variable for DNS / CD");
  scheme_cmd->add_option("payload", payload, "payload formula(s)");
  add_common(scheme_cmd, true);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "stream the canonical enumeration");
  enumerate->add_option("--max-size", enum_size, "largest AST size")
      ->check(CLI::Range(1, 10));
  add_common(enumerate, false);

  CLI::App* check = app.add_subcommand("check", "run a validation suite");
  check->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(hlab::suite_names()));
  check
      ->add_option("--max-size", check_size,
                   "override the suite's size or sample budget")
      ->check(CLI::PositiveNumber);
  add_common(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "\n" << kGrammar;
    return 2;
  }

  try {
    hlab::Signature sig =
        c.sig_path.empty() ? hlab::Signature::standard() : load_signature(c.sig_path);
    bool json_out = c.format.empty() ? classify->parsed() : c.format == "json";
    if (classify->parsed()) {
      for_each_parsed(c, sig,
                      [&](const hlab::FormulaPtr& f) { emit_classify(f, cap, json_out); });
      return 0;
    }
    if (translate->parsed()) return run_translate(c, sig, kind, json_out);
    if (prenex->parsed()) return run_prenex(c, sig, rank, klass, json_out);
    if (witness->parsed()) return run_witness(c, sig, lemma, rank, json_out);
    if (scheme_cmd->parsed()) return run_scheme(c, sig, scheme, payload, var, json_out);
    if (enumerate->parsed()) return run_enumerate(enum_size, json_out);
    return run_check(suite, check_size, json_out);
  } catch (const hlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const hlab::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
