#include "hlab/hierarchy.hpp"

#include <algorithm>

namespace hlab {

const std::vector<ClassFamily>& all_families() {
  static const std::vector<ClassFamily> fams = {
      ClassFamily::Sigma,        ClassFamily::Pi,
      ClassFamily::E,            ClassFamily::U,
      ClassFamily::F,            ClassFamily::EPlus,
      ClassFamily::UPlus,        ClassFamily::FPlus,
      ClassFamily::R,            ClassFamily::J,
      ClassFamily::RPrime,       ClassFamily::JPrime,
      ClassFamily::RDoublePrime, ClassFamily::JDoublePrime,
      ClassFamily::Q,            ClassFamily::V,
      ClassFamily::EPi,          ClassFamily::ESigma,
      ClassFamily::VeePi,        ClassFamily::BPlus,
  };
  return fams;
}

std::string family_name(ClassFamily f) {
  switch (f) {
    case ClassFamily::Sigma: return "Sigma";
    case ClassFamily::Pi: return "Pi";
    case ClassFamily::E: return "E";
    case ClassFamily::U: return "U";
    case ClassFamily::F: return "F";
    case ClassFamily::EPlus: return "EPlus";
    case ClassFamily::UPlus: return "UPlus";
    case ClassFamily::FPlus: return "FPlus";
    case ClassFamily::R: return "R";
    case ClassFamily::J: return "J";
    case ClassFamily::RPrime: return "RPrime";
    case ClassFamily::JPrime: return "JPrime";
    case ClassFamily::RDoublePrime: return "RDoublePrime";
    case ClassFamily::JDoublePrime: return "JDoublePrime";
    case ClassFamily::Q: return "Q";
    case ClassFamily::V: return "V";
    case ClassFamily::EPi: return "EPi";
    case ClassFamily::ESigma: return "ESigma";
    case ClassFamily::VeePi: return "VeePi";
    case ClassFamily::BPlus: return "BPlus";
  }
  return "?";
}

std::optional<ClassFamily> family_from_name(const std::string& name) {
  for (ClassFamily f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

bool is_quantifier_free(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return is_quantifier_free(f->lhs) && is_quantifier_free(f->rhs);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return false;
  }
  return false;
}

namespace {

AltPath flipped(const AltPath& s) {
  AltPath out = s;
  for (char& c : out) c = (c == '+') ? '-' : '+';
  return out;
}

std::set<AltPath> quant_paths(const std::set<AltPath>& body, char sign) {
  std::set<AltPath> out;
  for (const auto& s : body) {
    if (!s.empty() && s[0] == sign)
      out.insert(s);
    else
      out.insert(sign + s);
  }
  return out;
}

}  // namespace

std::set<AltPath> alt_paths(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return {""};
    case FormulaKind::And:
    case FormulaKind::Or: {
      auto out = alt_paths(f->lhs);
      auto r = alt_paths(f->rhs);
      out.insert(r.begin(), r.end());
      return out;
    }
    case FormulaKind::Implies: {
      std::set<AltPath> out;
      for (const auto& s : alt_paths(f->lhs)) out.insert(flipped(s));
      auto r = alt_paths(f->rhs);
      out.insert(r.begin(), r.end());
      return out;
    }
    case FormulaKind::Forall:
      return quant_paths(alt_paths(f->lhs), '-');
    case FormulaKind::Exists:
      return quant_paths(alt_paths(f->lhs), '+');
  }
  return {""};
}

int degree(const FormulaPtr& f) {
  int d = 0;
  for (const auto& s : alt_paths(f)) d = std::max(d, static_cast<int>(s.size()));
  return d;
}

bool is_prenex(const FormulaPtr& f) {
  FormulaPtr g = f;
  while (is_quantifier(g)) g = g->lhs;
  return is_quantifier_free(g);
}

std::optional<std::string> prenex_word(const FormulaPtr& f) {
  std::string word;
  FormulaPtr g = f;
  while (is_quantifier(g)) {
    char c = g->kind == FormulaKind::Exists ? '+' : '-';
    if (word.empty() || word.back() != c) word.push_back(c);
    g = g->lhs;
  }
  if (!is_quantifier_free(g)) return std::nullopt;
  return word;
}

namespace {

// One-sided path conditions shared by E/U and their +-variants:
// every path is at most k long, and every path of length exactly k
// starts with the given sign.
bool paths_one_sided(const FormulaPtr& f, int k, char sign) {
  for (const auto& s : alt_paths(f)) {
    int len = static_cast<int>(s.size());
    if (len > k) return false;
    if (len == k && len > 0 && s[0] != sign) return false;
  }
  return true;
}

bool in_epi(const FormulaPtr& f, int k);

// The R/J-style simultaneous inductions share one shape and differ
// only in the base class; lhs_base/rhs_base are the bases of the
// R-side (negative) and J-side (positive) classes at rank k.
enum class InductiveBase { FPlusBase, SwappedPlusBase, PrenexBase };

bool in_r_side(const FormulaPtr& f, int k, InductiveBase base);
bool in_j_side(const FormulaPtr& f, int k, InductiveBase base);

bool r_base_holds(const FormulaPtr& f, int k, InductiveBase base) {
  switch (base) {
    case InductiveBase::FPlusBase:
      return in_class(f, {ClassFamily::FPlus, k - 1});
    case InductiveBase::SwappedPlusBase:
      return in_class(f, {ClassFamily::EPlus, k - 1});
    case InductiveBase::PrenexBase:
      return in_class(f, {ClassFamily::Sigma, k - 1});
  }
  return false;
}

bool j_base_holds(const FormulaPtr& f, int k, InductiveBase base) {
  switch (base) {
    case InductiveBase::FPlusBase:
      return in_class(f, {ClassFamily::FPlus, k - 1});
    case InductiveBase::SwappedPlusBase:
      return in_class(f, {ClassFamily::UPlus, k - 1});
    case InductiveBase::PrenexBase:
      return in_class(f, {ClassFamily::Pi, k - 1});
  }
  return false;
}

bool in_r_side(const FormulaPtr& f, int k, InductiveBase base) {
  if (k <= 0) return k == 0 && is_quantifier_free(f);
  if (r_base_holds(f, k, base)) return true;
  switch (f->kind) {
    case FormulaKind::And:
    case FormulaKind::Or:
      return in_r_side(f->lhs, k, base) && in_r_side(f->rhs, k, base);
    case FormulaKind::Implies:
      return in_j_side(f->lhs, k, base) && in_r_side(f->rhs, k, base);
    case FormulaKind::Forall:
      return in_r_side(f->lhs, k, base);
    default:
      return false;
  }
}

bool in_j_side(const FormulaPtr& f, int k, InductiveBase base) {
  if (k <= 0) return k == 0 && is_quantifier_free(f);
  if (j_base_holds(f, k, base)) return true;
  switch (f->kind) {
    case FormulaKind::And:
    case FormulaKind::Or:
      return in_j_side(f->lhs, k, base) && in_j_side(f->rhs, k, base);
    case FormulaKind::Implies:
      return in_r_side(f->lhs, k, base) && in_j_side(f->rhs, k, base);
    case FormulaKind::Exists:
      return in_j_side(f->lhs, k, base);
    default:
      return false;
  }
}

bool in_q(const FormulaPtr& f, int k) {
  if (k <= 0) return k == 0 && is_quantifier_free(f);
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Placeholder:
    case FormulaKind::Prime:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
      return in_q(f->lhs, k) && in_q(f->rhs, k);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return in_q(f->lhs, k);
    case FormulaKind::Implies:
      return in_j_side(f->lhs, k, InductiveBase::FPlusBase) && in_q(f->rhs, k);
  }
  return false;
}

bool in_v(const FormulaPtr& f, int k) {
  if (k <= 0) return k == 0 && is_quantifier_free(f);
  if (in_j_side(f, k, InductiveBase::FPlusBase)) return true;
  switch (f->kind) {
    case FormulaKind::And:
      return in_v(f->lhs, k) && in_v(f->rhs, k);
    case FormulaKind::Forall:
      return in_v(f->lhs, k);
    default:
      return false;
  }
}

bool in_epi(const FormulaPtr& f, int k) {
  if (k <= 0) return k == 0 && is_quantifier_free(f);
  if (in_class(f, {ClassFamily::Pi, k})) return true;
  switch (f->kind) {
    case FormulaKind::Or:
      return in_epi(f->lhs, k) && in_epi(f->rhs, k);
    case FormulaKind::Forall:
      return in_epi(f->lhs, k);
    default:
      return false;
  }
}

// The leading exists block may be empty; EPi_k itself sits inside
// ESigma_{k+1}.
bool in_esigma(const FormulaPtr& f, int k) {
  if (k <= 0) return k == 0 && is_quantifier_free(f);
  FormulaPtr g = f;
  while (g->kind == FormulaKind::Exists) g = g->lhs;
  return in_epi(g, k - 1);
}

bool in_veepi(const FormulaPtr& f, int k) {
  if (k < 0) return false;
  if (f->kind == FormulaKind::Or)
    return in_veepi(f->lhs, k) && in_veepi(f->rhs, k);
  return in_class(f, {ClassFamily::Pi, k});
}

bool in_bplus(const FormulaPtr& f, int k) {
  if (k < 0) return false;
  if (in_class(f, {ClassFamily::EPlus, k}) || in_class(f, {ClassFamily::UPlus, k}))
    return true;
  switch (f->kind) {
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return in_bplus(f->lhs, k) && in_bplus(f->rhs, k);
    default:
      return false;
  }
}

}  // namespace

bool in_class(const FormulaPtr& f, ClassId c) {
  int k = c.rank;
  if (k < 0) return false;
  switch (c.family) {
    case ClassFamily::Sigma: {
      auto w = prenex_word(f);
      if (!w) return false;
      if (k == 0) return w->empty();
      return static_cast<int>(w->size()) == k && (*w)[0] == '+';
    }
    case ClassFamily::Pi: {
      auto w = prenex_word(f);
      if (!w) return false;
      if (k == 0) return w->empty();
      return static_cast<int>(w->size()) == k && (*w)[0] == '-';
    }
    case ClassFamily::F:
      return degree(f) == k;
    case ClassFamily::FPlus:
      return degree(f) <= k;
    case ClassFamily::E:
      if (k == 0) return is_quantifier_free(f);
      return degree(f) == k && paths_one_sided(f, k, '+');
    case ClassFamily::U:
      if (k == 0) return is_quantifier_free(f);
      return degree(f) == k && paths_one_sided(f, k, '-');
    case ClassFamily::EPlus:
      return paths_one_sided(f, k, '+');
    case ClassFamily::UPlus:
      return paths_one_sided(f, k, '-');
    case ClassFamily::R:
      return in_r_side(f, k, InductiveBase::FPlusBase);
    case ClassFamily::J:
      return in_j_side(f, k, InductiveBase::FPlusBase);
    case ClassFamily::RPrime:
      return in_r_side(f, k, InductiveBase::SwappedPlusBase);
    case ClassFamily::JPrime:
      return in_j_side(f, k, InductiveBase::SwappedPlusBase);
    case ClassFamily::RDoublePrime:
      return in_r_side(f, k, InductiveBase::PrenexBase);
    case ClassFamily::JDoublePrime:
      return in_j_side(f, k, InductiveBase::PrenexBase);
    case ClassFamily::Q:
      return in_q(f, k);
    case ClassFamily::V:
      return in_v(f, k);
    case ClassFamily::EPi:
      return in_epi(f, k);
    case ClassFamily::ESigma:
      return in_esigma(f, k);
    case ClassFamily::VeePi:
      return in_veepi(f, k);
    case ClassFamily::BPlus:
      return in_bplus(f, k);
  }
  return false;
}

FormulaPtr pad_to(const FormulaPtr& f, ClassId c) {
  if (c.family != ClassFamily::Sigma && c.family != ClassFamily::Pi)
    throw DomainError("pad_to targets only Sigma/Pi classes");
  if (c.rank < 0) throw DomainError("pad_to: negative target rank");
  auto w = prenex_word(f);
  if (!w)
    throw DomainError("pad_to: input is not prenex: " + render(f));

  char head = c.family == ClassFamily::Sigma ? '+' : '-';
  auto slot_sign = [&](int i) {  // 1-based slot index
    return (i % 2 == 1) == (head == '+') ? '+' : '-';
  };
  int offset = 0;
  if (!w->empty() && (*w)[0] != head) offset = 1;
  if (offset + static_cast<int>(w->size()) > c.rank)
    throw DomainError("pad_to: " + render(f) + " does not fit in " +
                      family_name(c.family) + "_" + std::to_string(c.rank));
  if (offset == 0 && static_cast<int>(w->size()) == c.rank) return f;

  // Peel the existing blocks so fresh slots can be interleaved.
  std::vector<std::pair<FormulaKind, std::vector<std::string>>> blocks;
  FormulaPtr g = f;
  while (is_quantifier(g)) {
    if (blocks.empty() || blocks.back().first != g->kind)
      blocks.push_back({g->kind, {}});
    blocks.back().second.push_back(g->name);
    g = g->lhs;
  }

  std::set<std::string> used = all_names(f);
  int next_fresh = 1;
  auto fresh = [&] {
    for (;; ++next_fresh) {
      std::string name = "z" + std::to_string(next_fresh);
      if (!used.count(name)) {
        used.insert(name);
        ++next_fresh;
        return name;
      }
    }
  };

  // Assemble innermost slot first.
  std::vector<std::vector<std::string>> slot_vars(c.rank + 1);
  for (int i = 1; i <= c.rank; ++i) {
    int block_index = i - offset - 1;
    if (block_index >= 0 && block_index < static_cast<int>(blocks.size()))
      slot_vars[i] = blocks[block_index].second;
    else
      slot_vars[i] = {fresh()};
  }
  FormulaPtr out = g;
  for (int i = c.rank; i >= 1; --i) {
    bool uni = slot_sign(i) == '-';
    const auto& vars = slot_vars[i];
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      out = uni ? mk_forall(*it, out) : mk_exists(*it, out);
  }
  return out;
}

ClassifyReport classify_report(const FormulaPtr& f, int cap) {
  ClassifyReport rep;
  rep.cap = cap;
  rep.degree = degree(f);
  auto paths = alt_paths(f);
  rep.paths.assign(paths.begin(), paths.end());
  std::sort(rep.paths.begin(), rep.paths.end(),
            [](const AltPath& a, const AltPath& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (ClassFamily fam : all_families()) {
    std::optional<int> found;
    for (int k = 0; k <= cap; ++k) {
      if (in_class(f, {fam, k})) {
        found = k;
        break;
      }
    }
    rep.minima.emplace_back(fam, found);
  }
  return rep;
}

}  // namespace hlab
