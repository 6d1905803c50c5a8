// Python bindings for the hierarchy lab core. Formulas cross the
// boundary as strings in the surface syntax; structured results come
// back as plain dicts and tuples so callers need no wrapper types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlab/ast.hpp"
#include "hlab/hierarchy.hpp"
#include "hlab/json_io.hpp"
#include "hlab/normalize.hpp"
#include "hlab/oracle.hpp"
#include "hlab/translate.hpp"

namespace py = pybind11;

namespace {

hlab::FormulaPtr parse(const std::string& text) {
  return hlab::parse_formula(text);
}

hlab::ClassFamily family_of(const std::string& name) {
  auto f = hlab::family_from_name(name);
  if (!f) throw hlab::DomainError("unknown class family: " + name);
  return *f;
}

py::dict witness_dict(const hlab::WitnessResult& w) {
  py::dict cls;
  cls["family"] = hlab::family_name(w.target_class.family);
  cls["rank"] = w.target_class.rank;
  py::dict d;
  d["witness"] = hlab::render(w.witness);
  d["target_class"] = cls;
  d["forward_over"] = w.forward_over;
  d["backward_over"] = w.backward_over;
  return d;
}

py::dict verdict_dict(const hlab::Verdict& v) {
  py::dict d;
  switch (v.status) {
    case hlab::Verdict::Status::Pass: d["status"] = "pass"; break;
    case hlab::Verdict::Status::Refuted: d["status"] = "refuted"; break;
    case hlab::Verdict::Status::Inconclusive: d["status"] = "inconclusive"; break;
  }
  if (v.counterexample) {
    py::dict ce;
    ce["formula"] = hlab::render(v.counterexample->formula);
    ce["assignment"] = v.counterexample->assignment;
    ce["bound"] = v.counterexample->bound;
    d["counterexample"] = ce;
  } else {
    d["counterexample"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "formula hierarchy analysis, translations, and witness transforms";

  py::register_exception<hlab::ParseError>(m, "FormulaSyntaxError", PyExc_ValueError);
  py::register_exception<hlab::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "render_canonical",
      [](const std::string& text) { return hlab::render(parse(text)); },
      py::arg("formula"),
      "Parse a formula and print it back in canonical form.");

  m.def(
      "to_json",
      [](const std::string& text) {
        return hlab::formula_to_json(parse(text)).dump();
      },
      py::arg("formula"), "Serialize a formula to its JSON AST.");

  m.def(
      "from_json",
      [](const std::string& text) {
        return hlab::render(hlab::formula_from_json(nlohmann::json::parse(text)));
      },
      py::arg("ast"), "Render the formula described by a JSON AST.");

  m.def(
      "free_vars",
      [](const std::string& text) { return hlab::free_vars(parse(text)); },
      py::arg("formula"), "Free variables in first-occurrence order.");

  m.def(
      "degree", [](const std::string& text) { return hlab::degree(parse(text)); },
      py::arg("formula"), "Maximal quantifier alternation depth.");

  m.def(
      "alt_paths",
      [](const std::string& text) {
        auto paths = hlab::alt_paths(parse(text));
        return std::vector<std::string>(paths.begin(), paths.end());
      },
      py::arg("formula"), "Alternation paths over {+, -}.");

  m.def(
      "in_class",
      [](const std::string& text, const std::string& family, int rank) {
        return hlab::in_class(parse(text), {family_of(family), rank});
      },
      py::arg("formula"), py::arg("family"), py::arg("rank"),
      "Membership in the named class at the given rank.");

  m.def(
      "classify",
      [](const std::string& text, int cap) {
        hlab::ClassifyReport rep = hlab::classify_report(parse(text), cap);
        py::dict classes;
        for (const auto& [family, rank] : rep.minima)
          if (rank) classes[hlab::family_name(family).c_str()] = *rank;
        py::dict d;
        d["degree"] = rep.degree;
        d["alt"] = rep.paths;
        d["cap"] = rep.cap;
        d["classes"] = classes;
        return d;
      },
      py::arg("formula"), py::arg("cap") = 4,
      "Minimal admitting rank per class family, up to the cap.");

  m.def(
      "is_prenex",
      [](const std::string& text) { return hlab::is_prenex(parse(text)); },
      py::arg("formula"));

  m.def(
      "prenex_word",
      [](const std::string& text) { return hlab::prenex_word(parse(text)); },
      py::arg("formula"),
      "Quantifier block word of a prenex formula, None otherwise.");

  m.def(
      "pad_to",
      [](const std::string& text, const std::string& family, int rank) {
        return hlab::render(hlab::pad_to(parse(text), {family_of(family), rank}));
      },
      py::arg("formula"), py::arg("family"), py::arg("rank"),
      "Insert vacuous blocks to reach strict Sigma_k or Pi_k.");

  m.def(
      "translate",
      [](const std::string& text, const std::string& kind) {
        hlab::FormulaPtr f = parse(text);
        if (kind == "dollar") return hlab::render(hlab::dollar_translate(f));
        if (kind == "a") return hlab::render(hlab::a_translate(f));
        if (kind == "kuroda") return hlab::render(hlab::kuroda_translate(f));
        if (kind == "dual") return hlab::render(hlab::dual(f));
        throw hlab::DomainError("unknown translation kind: " + kind);
      },
      py::arg("formula"), py::arg("kind"),
      "Apply one of the translations: dollar, a, kuroda, dual.");

  m.def(
      "simplify_or_bot",
      [](const std::string& text) {
        return hlab::render(hlab::simplify_or_bot(parse(text)));
      },
      py::arg("formula"), "Collapse vacuous `\\/ bot` disjuncts bottom up.");

  m.def(
      "prenex_classical",
      [](const std::string& text) {
        return hlab::render(hlab::prenex_classical(parse(text)));
      },
      py::arg("formula"), "Classical prenex normal form.");

  m.def(
      "prenex_in_class",
      [](const std::string& text, int rank, const std::string& family) {
        hlab::FormulaPtr f = parse(text);
        if (family.empty()) return witness_dict(hlab::prenex_in_class(f, rank));
        return witness_dict(hlab::prenex_in_class(f, rank, family_of(family)));
      },
      py::arg("formula"), py::arg("rank"), py::arg("family") = "",
      "Prenex into strict Sigma_k / Pi_k; family forces the side.");

  m.def(
      "epi_repair",
      [](const std::string& text, int k) {
        return hlab::render(hlab::epi_repair(parse(text), k));
      },
      py::arg("formula"), py::arg("k"));

  m.def(
      "epi_conjunction",
      [](const std::string& f, const std::string& g, int k) {
        return hlab::render(hlab::epi_conjunction(parse(f), parse(g), k));
      },
      py::arg("f"), py::arg("g"), py::arg("k"),
      "Single formula in the same class equivalent to f /\\ g.");

  m.def(
      "esigma_combine",
      [](const std::string& f, const std::string& g, int k) {
        auto [conj, disj] = hlab::esigma_combine(parse(f), parse(g), k);
        return std::make_pair(hlab::render(conj), hlab::render(disj));
      },
      py::arg("f"), py::arg("g"), py::arg("k"),
      "Pair of combined forms equivalent to f /\\ g and f \\/ g.");

  m.def(
      "u_witness_epi",
      [](const std::string& text, int k) {
        return witness_dict(hlab::u_witness_epi(parse(text), k));
      },
      py::arg("formula"), py::arg("k"));

  m.def(
      "e_neg_witness_epi",
      [](const std::string& text, int k) {
        return witness_dict(hlab::e_neg_witness_epi(parse(text), k));
      },
      py::arg("formula"), py::arg("k"));

  m.def(
      "u_neg_witness_esigma",
      [](const std::string& text, int k) {
        return witness_dict(hlab::u_neg_witness_esigma(parse(text), k));
      },
      py::arg("formula"), py::arg("k"));

  m.def(
      "e_witness_esigma",
      [](const std::string& text, int k) {
        return witness_dict(hlab::e_witness_esigma(parse(text), k));
      },
      py::arg("formula"), py::arg("k"));

  m.def(
      "witness_sigma",
      [](const std::string& text, int k, bool positive) {
        return witness_dict(hlab::witness_sigma(
            parse(text), k, positive ? hlab::Polarity::Pos : hlab::Polarity::Neg));
      },
      py::arg("formula"), py::arg("k"), py::arg("positive") = true);

  m.def(
      "b_decompose",
      [](const std::string& text, int k) {
        auto [pos, neg] = hlab::b_decompose(parse(text), k);
        return std::make_pair(hlab::render(pos), hlab::render(neg));
      },
      py::arg("formula"), py::arg("k"),
      "Positive and negative witnesses for a BPlus_k formula.");

  m.def(
      "scheme_instance",
      [](const std::string& name, const std::vector<std::string>& payload,
         const std::optional<std::string>& var) {
        auto id = hlab::scheme_from_name(name);
        if (!id) throw hlab::DomainError("unknown scheme: " + name);
        hlab::SchemePayload p;
        for (const std::string& text : payload) p.formulas.push_back(parse(text));
        p.var = var;
        return hlab::render(hlab::scheme_instance(*id, p));
      },
      py::arg("name"), py::arg("payload"), py::arg("var") = std::nullopt,
      "Instance of the named logical scheme over the payload formulas.");

  m.def(
      "dner_instance",
      [](const std::string& text) {
        auto [premise, conclusion] = hlab::dner_instance(parse(text));
        return std::make_pair(hlab::render(premise), hlab::render(conclusion));
      },
      py::arg("formula"), "Premise and conclusion of the rule instance.");

  m.def(
      "enumerate_all",
      [](int max_size) {
        if (max_size < 1 || max_size > 10)
          throw hlab::DomainError("enumerate_all: max_size must be in 1..10");
        hlab::EnumConfig cfg;
        cfg.max_size = max_size;
        std::vector<std::string> out;
        hlab::enumerate_formulas(cfg, [&](const hlab::FormulaPtr& f) {
          out.push_back(hlab::render(f));
          return true;
        });
        return out;
      },
      py::arg("max_size"),
      "Every formula over the default atom pool up to the size bound.");

  m.def(
      "enumeration_counts",
      [](int max_size) {
        hlab::EnumConfig cfg;
        cfg.max_size = max_size;
        return hlab::enumeration_counts(cfg);
      },
      py::arg("max_size"), "Formula counts per exact size 1..max_size.");

  m.def(
      "check_equiv",
      [](const std::string& f, const std::string& g) {
        return verdict_dict(hlab::check_equiv(parse(f), parse(g)));
      },
      py::arg("f"), py::arg("g"),
      "Bounded-evaluation equivalence verdict for two formulas.");

  m.def("suite_names", &hlab::suite_names, "Registered validation suites.");

  m.def(
      "run_suite",
      [](const std::string& name, int max_size, std::uint64_t seed) {
        hlab::SuiteOptions opt;
        opt.max_size = max_size;
        opt.seed = seed;
        hlab::SuiteReport rep = hlab::run_suite(name, opt);
        py::list failures;
        for (const hlab::SuiteFailure& f : rep.failures) {
          py::dict d;
          d["formula"] = f.formula;
          d["assignment"] = f.assignment;
          d["bound"] = f.bound;
          failures.append(d);
        }
        py::dict d;
        d["suite"] = rep.suite;
        d["checked"] = rep.checked;
        d["failures"] = failures;
        return d;
      },
      py::arg("name"), py::arg("max_size") = -1, py::arg("seed") = 0,
      "Run one validation suite; max_size -1 keeps its default budget.");

  m.def("default_seed", &hlab::default_seed,
        "Seed used by randomized components; HIERARCHY_LAB_SEED overrides it.");

  m.attr("__version__") = "0.1.0";
}
