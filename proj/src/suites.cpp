#include <algorithm>

#include <nlohmann/json.hpp>

#include "hlab/normalize.hpp"
#include "hlab/oracle.hpp"
#include "hlab/translate.hpp"

namespace hlab {

namespace {

constexpr std::size_t kMaxStoredFailures = 100;

void record(SuiteReport& rep, std::string formula, std::string what,
            int bound) {
  if (rep.failures.size() < kMaxStoredFailures)
    rep.failures.push_back({std::move(formula), std::move(what), bound});
}

int count_quantifiers(const FormulaPtr& f) {
  if (!f) return 0;
  int n = is_quantifier(f) ? 1 : 0;
  return n + count_quantifiers(f->lhs) + count_quantifiers(f->rhs);
}

bool has_placeholder(const FormulaPtr& f) {
  if (!f) return false;
  if (f->kind == FormulaKind::Placeholder) return true;
  return has_placeholder(f->lhs) || has_placeholder(f->rhs);
}

std::set<std::string> fv_set(const FormulaPtr& f) {
  auto v = free_vars(f);
  return {v.begin(), v.end()};
}

// Agreement expected between two formulas at every evaluation point.
enum class Agree { Equal, Negation, Covers };

// Evaluate a against b over sampled tables at bounds scaled down with the
// quantifier count, after closing both under one shared universal prefix.
// Returns the first violating evaluation point, if any.
std::optional<SuiteFailure> check_pointwise(const FormulaPtr& a,
                                            const FormulaPtr& b, Agree mode,
                                            std::uint64_t seed) {
  auto preds = collect_predicates(a);
  auto more = collect_predicates(b);
  preds.insert(more.begin(), more.end());
  auto tables = make_tables(preds, seed);
  int q = std::max(count_quantifiers(a), count_quantifiers(b));
  // Evaluation cost scales as (bound+1)^q, so deep prefixes get shallow
  // bounds and fewer tables; a one-point model is the last resort.
  std::vector<int> bounds;
  std::size_t table_cap = tables.size();
  if (q <= 2) bounds = {3, 5, 8};
  else if (q <= 4) bounds = {2, 3};
  else if (q == 5) bounds = {1, 2};
  else if (q <= 9) { bounds = {1}; table_cap = 8; }
  else if (q <= 14) { bounds = {1}; table_cap = 2; }
  else { bounds = {0}; table_cap = 2; }
  if (tables.size() > table_cap) tables.resize(table_cap);
  std::vector<std::string> order = free_vars(a);
  for (const auto& v : free_vars(b))
    if (std::find(order.begin(), order.end(), v) == order.end())
      order.push_back(v);
  FormulaPtr ca = a, cb = b;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    ca = mk_forall(*it, ca);
    cb = mk_forall(*it, cb);
  }
  bool ph_used = has_placeholder(a) || has_placeholder(b);
  for (const auto& table : tables) {
    for (int phi = 0; phi < (ph_used ? 2 : 1); ++phi) {
      bool ph = phi == 1;
      for (int bound : bounds) {
        bool ea = bounded_eval(ca, bound, ph, table);
        bool eb = bounded_eval(cb, bound, ph, table);
        bool bad = mode == Agree::Equal     ? ea != eb
                   : mode == Agree::Negation ? ea == eb
                                             : !(ea || eb);
        if (bad)
          return SuiteFailure{render(a), describe_tables(ph, table), bound};
      }
    }
  }
  return std::nullopt;
}

std::uint64_t suite_seed(const SuiteOptions& opt, std::uint64_t salt) {
  std::uint64_t base = opt.seed != 0 ? opt.seed : default_seed();
  return base * 0x9E3779B97F4A7C15ull + salt;
}

// ---------------------------------------------------------------------------
// class-equalities: packed enumeration
//
// Formulas over atoms {p, q(x), bot} and variables {x, y} are enumerated as
// flat nodes whose class data is folded bottom-up: every alternation path is
// an alternating sign word, hence representable by (leading sign, length)
// and a whole path set by one 32-bit mask.  Grammar-defined memberships for
// ranks 1..3 become seven bits per rank computed from the children's bits.
// ---------------------------------------------------------------------------

constexpr std::uint32_t kEmptyBit = 1u;
constexpr std::uint32_t kPlusField = 0x0000FFFEu;   // '+' word of length L at bit L
constexpr std::uint32_t kMinusField = 0xFFFF0000u;  // '-' word of length L at bit 15+L

std::uint32_t mask_flip(std::uint32_t m) {
  return (m & kEmptyBit) | ((m & kPlusField) << 15) | ((m & kMinusField) >> 15);
}

std::uint32_t mask_forall(std::uint32_t m) {
  return (m & kMinusField) | ((m & (kPlusField | kEmptyBit)) << 16);
}

std::uint32_t mask_exists(std::uint32_t m) {
  return (m & kPlusField) | ((m & kEmptyBit) << 1) | ((m & kMinusField) >> 14);
}

int mask_degree(std::uint32_t m) {
  int d = 0;
  if (std::uint32_t p = m & kPlusField) d = 31 - __builtin_clz(p);
  if (std::uint32_t n = m & kMinusField)
    d = std::max(d, (31 - __builtin_clz(n)) - 15);
  return d;
}

// Ranks stay below 15 here, so every shift below is in range.
bool mask_one_sided(std::uint32_t m, int k, bool plus) {
  if (k == 0) return m == kEmptyBit;
  if (plus) {
    std::uint32_t plus_over = kPlusField & ~((1u << (k + 1)) - 1);
    std::uint32_t minus_at = kMinusField & ~((1u << (15 + k)) - 1);
    return (m & (plus_over | minus_at)) == 0;
  }
  std::uint32_t minus_over = kMinusField & ~((1u << (16 + k)) - 1);
  std::uint32_t plus_at = kPlusField & ~((1u << k) - 1);
  return (m & (minus_over | plus_at)) == 0;
}

// Prenex block word: 0 not prenex, 1 empty word, else
// 2 + 2*(length-1) + (leading universal ? 1 : 0).
std::uint8_t word_binary(std::uint8_t lw, std::uint8_t rw) {
  return (lw == 1 && rw == 1) ? 1 : 0;
}

std::uint8_t word_quant(bool forall_q, std::uint8_t w) {
  if (w == 0) return 0;
  if (w == 1) return static_cast<std::uint8_t>(2 + (forall_q ? 1 : 0));
  int len = (w - 2) / 2 + 1;
  bool lead_forall = ((w - 2) % 2) == 1;
  if (lead_forall == forall_q) return w;
  return static_cast<std::uint8_t>(2 + 2 * len + (forall_q ? 1 : 0));
}

bool word_is(std::uint8_t w, int k, bool pi) {
  if (k == 0) return w == 1;
  return w == 2 + 2 * (k - 1) + (pi ? 1 : 0);
}

enum : std::uint32_t {
  fR = 1, fJ = 2, fRP = 4, fJP = 8, fRPP = 16, fJPP = 32, fB = 64
};

std::uint32_t flag_byte(std::uint32_t flags, int k) {
  return (flags >> (8 * (k - 1))) & 0xFF;
}

// kind: 0 atom, 1 and, 2 or, 3 implies, 4 exists, 5 forall
std::uint32_t compute_flags(int kind, std::uint32_t alt, std::uint8_t word,
                            std::uint32_t lf, std::uint32_t rf) {
  std::uint32_t flags = 0;
  int deg = mask_degree(alt);
  for (int k = 1; k <= 3; ++k) {
    std::uint32_t lb = flag_byte(lf, k);
    std::uint32_t rb = flag_byte(rf, k);
    bool r = deg <= k - 1, j = r;
    bool rp = mask_one_sided(alt, k - 1, true);
    bool jp = mask_one_sided(alt, k - 1, false);
    bool rpp = word_is(word, k - 1, false);
    bool jpp = word_is(word, k - 1, true);
    switch (kind) {
      case 1:
      case 2:
        r = r || ((lb & fR) && (rb & fR));
        j = j || ((lb & fJ) && (rb & fJ));
        rp = rp || ((lb & fRP) && (rb & fRP));
        jp = jp || ((lb & fJP) && (rb & fJP));
        rpp = rpp || ((lb & fRPP) && (rb & fRPP));
        jpp = jpp || ((lb & fJPP) && (rb & fJPP));
        break;
      case 3:
        r = r || ((lb & fJ) && (rb & fR));
        j = j || ((lb & fR) && (rb & fJ));
        rp = rp || ((lb & fJP) && (rb & fRP));
        jp = jp || ((lb & fRP) && (rb & fJP));
        rpp = rpp || ((lb & fJPP) && (rb & fRPP));
        jpp = jpp || ((lb & fRPP) && (rb & fJPP));
        break;
      case 4:
        j = j || (lb & fJ);
        jp = jp || (lb & fJP);
        jpp = jpp || (lb & fJPP);
        break;
      case 5:
        r = r || (lb & fR);
        rp = rp || (lb & fRP);
        rpp = rpp || (lb & fRPP);
        break;
      default: break;
    }
    bool bp = mask_one_sided(alt, k, true) || mask_one_sided(alt, k, false) ||
              (kind >= 1 && kind <= 3 && (lb & fB) && (rb & fB));
    std::uint32_t byte = (r ? fR : 0u) | (j ? fJ : 0u) | (rp ? fRP : 0u) |
                         (jp ? fJP : 0u) | (rpp ? fRPP : 0u) |
                         (jpp ? fJPP : 0u) | (bp ? fB : 0u);
    flags |= byte << (8 * (k - 1));
  }
  return flags;
}

struct ENode {
  std::uint8_t kind = 0;
  std::uint8_t idx = 0;
  std::int32_t l = -1, r = -1;
  std::uint32_t alt = 0;
  std::uint32_t flags = 0;
  std::uint8_t word = 0;
};

FormulaPtr node_formula(const std::vector<ENode>& nodes, const ENode& n) {
  switch (n.kind) {
    case 0:
      if (n.idx == 0) return mk_prime("p");
      if (n.idx == 1) return mk_prime("q", {tvar("x")});
      return mk_bot();
    case 1:
      return mk_and(node_formula(nodes, nodes[n.l]),
                    node_formula(nodes, nodes[n.r]));
    case 2:
      return mk_or(node_formula(nodes, nodes[n.l]),
                   node_formula(nodes, nodes[n.r]));
    case 3:
      return mk_implies(node_formula(nodes, nodes[n.l]),
                        node_formula(nodes, nodes[n.r]));
    case 4:
      return mk_exists(n.idx == 0 ? "x" : "y", node_formula(nodes, nodes[n.l]));
    default:
      return mk_forall(n.idx == 0 ? "x" : "y", node_formula(nodes, nodes[n.l]));
  }
}

SuiteReport suite_class_equalities(const SuiteOptions& opt) {
  int max_size = opt.max_size > 0 ? opt.max_size : 9;
  if (max_size > 9)
    throw DomainError("class-equalities: max_size is capped at 9");
  SuiteReport rep;
  rep.suite = "class-equalities";
  std::vector<ENode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> span(
      static_cast<std::size_t>(max_size) + 1, {0, 0});
  std::uint64_t counter = 0;
  int stored_max = std::min(max_size, 8);

  auto examine = [&](const ENode& n) {
    ++counter;
    for (int k = 1; k <= 3; ++k) {
      std::uint32_t b = flag_byte(n.flags, k);
      bool up = mask_one_sided(n.alt, k, false);
      bool ep = mask_one_sided(n.alt, k, true);
      bool fp = mask_degree(n.alt) <= k;
      auto fail = [&](const std::string& what) {
        record(rep, render(node_formula(nodes, n)), what, k);
      };
      if (static_cast<bool>(b & fR) != up) fail("R != UPlus");
      if (static_cast<bool>(b & fJ) != ep) fail("J != EPlus");
      if (static_cast<bool>(b & fRP) != up) fail("RPrime != UPlus");
      if (static_cast<bool>(b & fJP) != ep) fail("JPrime != EPlus");
      if (static_cast<bool>(b & fB) != fp) fail("BPlus != FPlus");
      if ((b & fRPP) && !up) fail("RDoublePrime outside UPlus");
      if ((b & fJPP) && !ep) fail("JDoublePrime outside EPlus");
    }
    if (counter % 1997 == 0) {
      FormulaPtr f = node_formula(nodes, n);
      for (int k = 0; k <= 3; ++k) {
        struct Probe {
          ClassFamily fam;
          bool expect;
        };
        std::vector<Probe> probes = {
            {ClassFamily::UPlus, mask_one_sided(n.alt, k, false)},
            {ClassFamily::EPlus, mask_one_sided(n.alt, k, true)},
            {ClassFamily::FPlus, mask_degree(n.alt) <= k},
            {ClassFamily::Sigma, word_is(n.word, k, false)},
            {ClassFamily::Pi, word_is(n.word, k, true)},
        };
        if (k >= 1) {
          std::uint32_t b = flag_byte(n.flags, k);
          probes.push_back({ClassFamily::R, (b & fR) != 0});
          probes.push_back({ClassFamily::J, (b & fJ) != 0});
          probes.push_back({ClassFamily::RPrime, (b & fRP) != 0});
          probes.push_back({ClassFamily::JPrime, (b & fJP) != 0});
          probes.push_back({ClassFamily::RDoublePrime, (b & fRPP) != 0});
          probes.push_back({ClassFamily::JDoublePrime, (b & fJPP) != 0});
          probes.push_back({ClassFamily::BPlus, (b & fB) != 0});
        }
        for (const auto& probe : probes) {
          if (in_class(f, {probe.fam, k}) != probe.expect) {
            record(rep, render(f),
                   "packed decider disagrees with in_class: " +
                       family_name(probe.fam),
                   k);
          }
        }
      }
    }
  };

  for (int a = 0; a < 3; ++a) {
    ENode n;
    n.kind = 0;
    n.idx = static_cast<std::uint8_t>(a);
    n.alt = kEmptyBit;
    n.word = 1;
    n.flags = compute_flags(0, n.alt, n.word, 0, 0);
    examine(n);
    nodes.push_back(n);
  }
  span[1] = {0, nodes.size()};

  for (int s = 2; s <= max_size; ++s) {
    bool store = s <= stored_max;
    std::size_t start = nodes.size();
    auto emit = [&](const ENode& n) {
      examine(n);
      if (store) nodes.push_back(n);
    };
    for (int kind = 1; kind <= 3; ++kind) {
      for (int ls = 1; ls <= s - 2; ++ls) {
        auto [lb, le] = span[static_cast<std::size_t>(ls)];
        auto [rb, re] = span[static_cast<std::size_t>(s - 1 - ls)];
        for (std::size_t i = lb; i < le; ++i) {
          for (std::size_t j = rb; j < re; ++j) {
            ENode n;
            n.kind = static_cast<std::uint8_t>(kind);
            n.l = static_cast<std::int32_t>(i);
            n.r = static_cast<std::int32_t>(j);
            n.alt = kind == 3 ? (mask_flip(nodes[i].alt) | nodes[j].alt)
                              : (nodes[i].alt | nodes[j].alt);
            n.word = word_binary(nodes[i].word, nodes[j].word);
            n.flags =
                compute_flags(kind, n.alt, n.word, nodes[i].flags, nodes[j].flags);
            emit(n);
          }
        }
      }
    }
    for (int kind = 4; kind <= 5; ++kind) {
      for (int v = 0; v < 2; ++v) {
        auto [bb, be] = span[static_cast<std::size_t>(s - 1)];
        for (std::size_t i = bb; i < be; ++i) {
          ENode n;
          n.kind = static_cast<std::uint8_t>(kind);
          n.idx = static_cast<std::uint8_t>(v);
          n.l = static_cast<std::int32_t>(i);
          n.alt = kind == 4 ? mask_exists(nodes[i].alt)
                            : mask_forall(nodes[i].alt);
          n.word = word_quant(kind == 5, nodes[i].word);
          n.flags = compute_flags(kind, n.alt, n.word, nodes[i].flags, 0);
          emit(n);
        }
      }
    }
    span[static_cast<std::size_t>(s)] = {start, nodes.size()};
  }
  rep.checked = counter;
  return rep;
}

// ---------------------------------------------------------------------------
// qf-dollar-lemma
// ---------------------------------------------------------------------------

SuiteReport suite_qf_dollar(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "qf-dollar-lemma";
  EnumConfig cfg;
  cfg.max_size = opt.max_size > 0 ? opt.max_size : 8;
  constexpr std::uint64_t kDomain = 4;  // assignments and tables over {0..3}
  enumerate_formulas(cfg, [&](const FormulaPtr& f) {
    if (!is_quantifier_free(f)) return true;
    FormulaPtr fd = dollar_translate(f);
    FormulaPtr fo = mk_or(f, mk_placeholder());
    std::vector<std::string> fv = free_vars(f);
    std::vector<std::pair<std::string, int>> preds;
    for (const auto& p : collect_predicates(f)) preds.push_back(p);
    std::vector<std::uint64_t> tuple_counts;
    for (const auto& [name, arity] : preds) {
      std::uint64_t t = 1;
      for (int i = 0; i < arity; ++i) t *= kDomain;
      tuple_counts.push_back(t);
    }
    std::vector<std::uint64_t> mask(preds.size(), 0);
    while (true) {
      TableMap tables;
      for (std::size_t i = 0; i < preds.size(); ++i) {
        PredTable t;
        for (std::uint64_t j = 0; j < tuple_counts[i]; ++j) {
          if (mask[i] & (std::uint64_t{1} << j)) {
            std::vector<std::uint64_t> tuple(
                static_cast<std::size_t>(preds[i].second));
            std::uint64_t ix = j;
            for (int d = preds[i].second - 1; d >= 0; --d) {
              tuple[static_cast<std::size_t>(d)] = ix % kDomain;
              ix /= kDomain;
            }
            t.insert(tuple);
          }
        }
        tables[preds[i]] = std::move(t);
      }
      std::vector<std::uint64_t> vals(fv.size(), 0);
      while (true) {
        Env env;
        for (std::size_t i = 0; i < fv.size(); ++i) env[fv[i]] = vals[i];
        for (int phi = 0; phi < 2; ++phi) {
          bool ph = phi == 1;
          ++rep.checked;
          if (bounded_eval(fd, 0, ph, tables, env) !=
              bounded_eval(fo, 0, ph, tables, env)) {
            std::string a = describe_tables(ph, tables);
            for (std::size_t i = 0; i < fv.size(); ++i)
              a += "; " + fv[i] + "=" + std::to_string(vals[i]);
            record(rep, render(f), a, 0);
          }
        }
        std::size_t pos = vals.size();
        bool done = true;
        while (pos > 0) {
          --pos;
          if (++vals[pos] < kDomain) {
            done = false;
            break;
          }
          vals[pos] = 0;
        }
        if (done) break;
      }
      std::size_t pos = mask.size();
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++mask[pos] < (std::uint64_t{1} << tuple_counts[pos])) {
          done = false;
          break;
        }
        mask[pos] = 0;
      }
      if (done) break;
    }
    return true;
  });
  return rep;
}

// ---------------------------------------------------------------------------
// kurahashi
// ---------------------------------------------------------------------------

SuiteReport suite_kurahashi(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "kurahashi";
  std::uint64_t seed = suite_seed(opt, 3);
  Rng rng(seed);
  GenConfig gcfg;
  int per = opt.max_size > 0 ? opt.max_size : 125;
  struct Cls {
    ClassFamily fam;
    int k;
  };
  for (const Cls& cls : std::vector<Cls>{{ClassFamily::Pi, 1},
                                         {ClassFamily::Sigma, 1},
                                         {ClassFamily::Pi, 2},
                                         {ClassFamily::Sigma, 2}}) {
    for (int i = 0; i < per; ++i) {
      FormulaPtr f = gen_prenex(rng, gcfg, cls.fam, cls.k, true);
      // keep the evaluation depth affordable
      while (count_quantifiers(f) > 3)
        f = gen_prenex(rng, gcfg, cls.fam, cls.k, true);
      FormulaPtr fd = dollar_translate(f);
      FormulaPtr fo = mk_or(f, mk_placeholder());
      auto notp = [](const FormulaPtr& x) {
        return mk_implies(x, mk_placeholder());
      };
      struct Claim {
        const char* tag;
        FormulaPtr a, b;
      };
      std::vector<Claim> claims = {
          {"dollar-vs-or", fd, fo},
          {"a-vs-or", a_translate(f), fo},
          {"double-neg-dollar", notp(notp(fd)), fd},
      };
      for (const auto& c : claims) {
        ++rep.checked;
        auto preds = collect_predicates(c.a);
        auto more = collect_predicates(c.b);
        preds.insert(more.begin(), more.end());
        Verdict v = check_equiv(c.a, c.b, {3, 5, 8}, make_tables(preds, seed));
        if (v.status == Verdict::Status::Refuted) {
          record(rep, render(f),
                 std::string(c.tag) + ": " + v.counterexample->assignment,
                 v.counterexample->bound);
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// a-collapse
// ---------------------------------------------------------------------------

bool has_or_bot(const FormulaPtr& f) {
  if (!f) return false;
  if (f->kind == FormulaKind::Or &&
      (f->lhs->kind == FormulaKind::Bot || f->rhs->kind == FormulaKind::Bot))
    return true;
  return has_or_bot(f->lhs) || has_or_bot(f->rhs);
}

SuiteReport suite_a_collapse(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "a-collapse";
  std::uint64_t target = opt.max_size > 0
                             ? static_cast<std::uint64_t>(opt.max_size)
                             : 10000;
  EnumConfig cfg;
  cfg.max_size = 8;
  enumerate_formulas(cfg, [&](const FormulaPtr& f) {
    if (has_or_bot(f)) return true;
    ++rep.checked;
    FormulaPtr back =
        simplify_or_bot(substitute_placeholder(a_translate(f), mk_bot()));
    if (!equal(back, f)) record(rep, render(f), "collapse mismatch", 0);
    return rep.checked < target;
  });
  return rep;
}

// ---------------------------------------------------------------------------
// fv-preservation
// ---------------------------------------------------------------------------

SuiteReport suite_fv(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "fv-preservation";
  std::uint64_t target = opt.max_size > 0
                             ? static_cast<std::uint64_t>(opt.max_size)
                             : 10000;
  std::uint64_t seed = suite_seed(opt, 4);
  Rng rng(seed);
  GenConfig gcfg;
  std::vector<FormulaPtr> corpus;
  std::uint64_t enumerated = std::min<std::uint64_t>(target * 2 / 5, 4000);
  EnumConfig ecfg;
  ecfg.max_size = 7;
  enumerate_formulas(ecfg, [&](const FormulaPtr& f) {
    corpus.push_back(f);
    return corpus.size() < enumerated;
  });
  int which = 0;
  while (corpus.size() < target) {
    int k = which % 4;
    switch (which % 5) {
      case 0:
        corpus.push_back(gen_prenex(rng, gcfg,
                                    rng.flip() ? ClassFamily::Sigma
                                               : ClassFamily::Pi,
                                    k, rng.flip()));
        break;
      case 1:
      case 2:
        corpus.push_back(gen_uplus(rng, gcfg, k, rng.flip()));
        break;
      default:
        corpus.push_back(gen_eplus(rng, gcfg, k, rng.flip()));
        break;
    }
    ++which;
  }
  for (const auto& f : corpus) {
    ++rep.checked;
    std::set<std::string> fv = fv_set(f);
    auto expect = [&](const char* tag, const FormulaPtr& g) {
      if (fv_set(g) != fv) record(rep, render(f), tag, 0);
    };
    try {
      expect("dollar_translate", dollar_translate(f));
      expect("a_translate", a_translate(f));
      expect("kuroda_translate", kuroda_translate(f));
      if (is_prenex(f)) expect("dual", dual(f));
      for (int k = 0; k <= 3; ++k) {
        if (in_class(f, {ClassFamily::EPlus, k})) {
          expect("prenex_in_class E", prenex_in_class(f, k, ClassFamily::E).witness);
          break;
        }
      }
      for (int k = 0; k <= 3; ++k) {
        if (in_class(f, {ClassFamily::UPlus, k})) {
          expect("prenex_in_class U", prenex_in_class(f, k, ClassFamily::U).witness);
          break;
        }
      }
      for (int k = 1; k <= 3; ++k) {
        if (in_class(f, {ClassFamily::UPlus, k})) {
          expect("u_witness_epi", u_witness_epi(f, k - 1).witness);
          expect("u_neg_witness_esigma", u_neg_witness_esigma(f, k - 1).witness);
          expect("witness_sigma neg", witness_sigma(f, k - 1, Polarity::Neg).witness);
          break;
        }
      }
      for (int k = 1; k <= 3; ++k) {
        if (in_class(f, {ClassFamily::EPlus, k})) {
          expect("e_neg_witness_epi", e_neg_witness_epi(f, k - 1).witness);
          expect("e_witness_esigma", e_witness_esigma(f, k - 1).witness);
          expect("witness_sigma pos", witness_sigma(f, k - 1, Polarity::Pos).witness);
          break;
        }
      }
      for (int k = 0; k <= 3; ++k) {
        if (in_class(f, {ClassFamily::BPlus, k})) {
          auto [pos, neg] = b_decompose(f, k);
          expect("b_decompose pos", pos);
          expect("b_decompose neg", neg);
          break;
        }
      }
    } catch (const DomainError& e) {
      record(rep, render(f), std::string("unexpected domain error: ") + e.what(),
             0);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// witness-directions
// ---------------------------------------------------------------------------

SuiteReport suite_witness(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "witness-directions";
  std::uint64_t seed = suite_seed(opt, 6);
  Rng rng(seed);
  GenConfig gcfg;
  int per = opt.max_size > 0 ? opt.max_size : 1000;

  auto check_result = [&](const char* tag, const FormulaPtr& src,
                          const WitnessResult& res, Agree mode) {
    ++rep.checked;
    try {
      if (!in_class(res.witness, res.target_class)) {
        record(rep, render(src),
               std::string(tag) + ": witness outside target class", 0);
        return;
      }
      if (auto fail = check_pointwise(res.witness, src, mode, seed)) {
        fail->assignment = std::string(tag) + ": " + fail->assignment;
        fail->formula = render(src);
        record(rep, fail->formula, fail->assignment, fail->bound);
      }
    } catch (const DomainError& e) {
      record(rep, render(src), std::string(tag) + ": " + e.what(), 0);
    }
  };

  for (int i = 0; i < per; ++i) {
    int k = i % 3;
    FormulaPtr f = gen_uplus(rng, gcfg, k + 1, true);
    check_result("u_witness_epi", f, u_witness_epi(f, k), Agree::Equal);
  }
  for (int i = 0; i < per; ++i) {
    int k = i % 3;
    FormulaPtr f = gen_eplus(rng, gcfg, k + 1, true);
    check_result("e_neg_witness_epi", f, e_neg_witness_epi(f, k),
                 Agree::Negation);
  }
  for (int i = 0; i < per; ++i) {
    int k = i % 3;
    FormulaPtr f = gen_uplus(rng, gcfg, k + 1, true);
    check_result("u_neg_witness_esigma", f, u_neg_witness_esigma(f, k),
                 Agree::Negation);
  }
  for (int i = 0; i < per; ++i) {
    int k = i % 3;
    FormulaPtr f = gen_eplus(rng, gcfg, k + 1, true);
    check_result("e_witness_esigma", f, e_witness_esigma(f, k), Agree::Equal);
  }
  for (int i = 0; i < per; ++i) {
    int k = i % 3;
    if (i < per / 2) {
      FormulaPtr f = gen_eplus(rng, gcfg, k + 1, true);
      check_result("witness_sigma pos", f, witness_sigma(f, k, Polarity::Pos),
                   Agree::Equal);
    } else {
      FormulaPtr f = gen_uplus(rng, gcfg, k + 1, true);
      check_result("witness_sigma neg", f, witness_sigma(f, k, Polarity::Neg),
                   Agree::Negation);
    }
  }

  // b_decompose: random and/or/implies trees over class-constrained leaves
  std::function<FormulaPtr(int, int)> gen_b = [&](int k, int depth) {
    if (depth == 0 || k == 0 || rng.below(3) == 0) {
      if (k == 0) return gen_uplus(rng, gcfg, 0, true);
      return rng.flip() ? gen_uplus(rng, gcfg, k, true)
                        : gen_eplus(rng, gcfg, k, true);
    }
    FormulaPtr l = gen_b(k, depth - 1);
    FormulaPtr r = gen_b(k, depth - 1);
    switch (rng.below(3)) {
      case 0: return mk_and(l, r);
      case 1: return mk_or(l, r);
      default: return mk_implies(l, r);
    }
  };
  std::function<bool(const FormulaPtr&, int)> b_shape =
      [&](const FormulaPtr& w, int k) -> bool {
    if (is_quantifier_free(w)) return true;
    if (in_class(w, {ClassFamily::EPi, k}) ||
        in_class(w, {ClassFamily::Sigma, k}))
      return true;
    if (w->kind == FormulaKind::And || w->kind == FormulaKind::Or)
      return b_shape(w->lhs, k) && b_shape(w->rhs, k);
    return false;
  };
  for (int i = 0; i < per; ++i) {
    int k = i % 3;
    FormulaPtr f = gen_b(k, 1 + static_cast<int>(rng.below(2)));
    ++rep.checked;
    try {
      if (!in_class(f, {ClassFamily::BPlus, k})) {
        record(rep, render(f), "b_decompose: generated input outside BPlus", k);
        continue;
      }
      auto [pos, neg] = b_decompose(f, k);
      if (!b_shape(pos, k) || !b_shape(neg, k)) {
        record(rep, render(f), "b_decompose: witness shape outside target", k);
        continue;
      }
      if (auto fail = check_pointwise(pos, f, Agree::Equal, seed)) {
        record(rep, render(f), "b_decompose pos: " + fail->assignment,
               fail->bound);
        continue;
      }
      if (auto fail = check_pointwise(neg, f, Agree::Negation, seed)) {
        record(rep, render(f), "b_decompose neg: " + fail->assignment,
               fail->bound);
        continue;
      }
      if (auto fail = check_pointwise(pos, neg, Agree::Covers, seed)) {
        record(rep, render(f), "b_decompose cover: " + fail->assignment,
               fail->bound);
      }
    } catch (const DomainError& e) {
      record(rep, render(f), std::string("b_decompose: ") + e.what(), k);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// prenex-contracts
// ---------------------------------------------------------------------------

SuiteReport suite_prenexes(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "prenex-contracts";
  std::uint64_t seed = suite_seed(opt, 7);
  Rng rng(seed);
  GenConfig gcfg;
  int per = opt.max_size > 0 ? opt.max_size : 1000;
  for (int i = 0; i < per; ++i) {
    int k = i % 3;
    bool u_side = rng.flip();
    bool closed = rng.flip();
    FormulaPtr f = u_side ? gen_uplus(rng, gcfg, k, closed)
                          : gen_eplus(rng, gcfg, k, closed);
    ++rep.checked;
    try {
      WitnessResult res =
          prenex_in_class(f, k, u_side ? ClassFamily::U : ClassFamily::E);
      ClassId target{u_side ? ClassFamily::Pi : ClassFamily::Sigma, k};
      if (!in_class(res.witness, target)) {
        record(rep, render(f), "prenex witness outside strict target", k);
        continue;
      }
      if (auto fail = check_pointwise(res.witness, f, Agree::Equal, seed)) {
        record(rep, render(f), fail->assignment, fail->bound);
      }
    } catch (const DomainError& e) {
      record(rep, render(f), std::string("prenex_in_class: ") + e.what(), k);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// dual-involution
// ---------------------------------------------------------------------------

SuiteReport suite_dual(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "dual-involution";
  std::uint64_t seed = suite_seed(opt, 8);
  EnumConfig cfg;
  cfg.max_size = opt.max_size > 0 ? opt.max_size : 8;
  enumerate_formulas(cfg, [&](const FormulaPtr& f) {
    auto w = prenex_word(f);
    if (!w) return true;
    ++rep.checked;
    int k = static_cast<int>(w->size());
    bool sigma = k > 0 && (*w)[0] == '+';
    FormulaPtr g = dual(f);
    ClassId target{k == 0 ? ClassFamily::Pi
                          : (sigma ? ClassFamily::Pi : ClassFamily::Sigma),
                   k};
    if (!in_class(g, target)) {
      record(rep, render(f), "dual image outside " + family_name(target.family),
             k);
      return true;
    }
    FormulaPtr dd = dual(g);
    if (prenex_word(dd) != w) {
      record(rep, render(f), "dual involution changed the prefix word", k);
      return true;
    }
    if (auto fail = check_pointwise(dd, f, Agree::Equal, seed)) {
      record(rep, render(f), fail->assignment, fail->bound);
    }
    return true;
  });
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"fv-preservation", "qf-dollar-lemma", "kurahashi",
          "a-collapse",      "class-equalities", "witness-directions",
          "dual-involution", "prenex-contracts"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "fv-preservation") return suite_fv(opt);
  if (name == "qf-dollar-lemma") return suite_qf_dollar(opt);
  if (name == "kurahashi") return suite_kurahashi(opt);
  if (name == "a-collapse") return suite_a_collapse(opt);
  if (name == "class-equalities") return suite_class_equalities(opt);
  if (name == "witness-directions") return suite_witness(opt);
  if (name == "dual-involution") return suite_dual(opt);
  if (name == "prenex-contracts") return suite_prenexes(opt);
  throw DomainError("unknown suite '" + name + "'");
}

std::string suite_report_to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["checked"] = report.checked;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({{"formula", f.formula},
                             {"assignment", f.assignment},
                             {"bound", f.bound}});
  }
  return j.dump(2);
}

}  // namespace hlab
