// Acceptance gate: runs every core guarantee end to end and prints one
// verdict line per criterion. Exits nonzero when any criterion fails.
//
// The eight validation suites run at their full default budgets; the
// ninth criterion replays the renderer through the parser across the
// whole bounded enumeration pool.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>

#include "hlab/ast.hpp"
#include "hlab/oracle.hpp"

namespace {

int failed_criteria = 0;

void verdict(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s %s (%s)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed_criteria;
}

// Runs one suite at its default budget; a positive time limit makes
// staying under it part of the criterion.
void run_one(const std::string& suite, double time_limit_s = 0.0) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  hlab::SuiteReport rep;
  try {
    rep = hlab::run_suite(suite);
    ok = rep.failures.empty();
    detail = "checked=" + std::to_string(rep.checked) +
             " failures=" + std::to_string(rep.failures.size());
  } catch (const std::exception& e) {
    detail = std::string("error: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, " %.1fs", secs);
  detail += buf;
  if (time_limit_s > 0.0) {
    ok = ok && secs < time_limit_s;
    std::snprintf(buf, sizeof buf, " limit=%.0fs", time_limit_s);
    detail += buf;
  }
  verdict(ok, suite, detail);
  for (std::size_t i = 0; i < rep.failures.size() && i < 3; ++i)
    std::printf("  %s | %s | bound=%d\n", rep.failures[i].formula.c_str(),
                rep.failures[i].assignment.c_str(), rep.failures[i].bound);
}

void run_roundtrip() {
  auto t0 = std::chrono::steady_clock::now();
  hlab::EnumConfig cfg;
  cfg.max_size = 8;
  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  std::string first_bad;
  hlab::enumerate_formulas(cfg, [&](const hlab::FormulaPtr& f) {
    ++checked;
    std::string text = hlab::render(f);
    bool same = false;
    try {
      same = hlab::equal(hlab::parse_formula(text), f);
    } catch (const std::exception&) {
      same = false;
    }
    if (!same) {
      ++bad;
      if (first_bad.empty()) first_bad = text;
    }
    return true;
  });
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, " %.1fs", secs);
  std::string detail = "checked=" + std::to_string(checked) +
                       " failures=" + std::to_string(bad) + buf;
  verdict(bad == 0, "parse-render-roundtrip", detail);
  if (bad != 0) std::printf("  first failing render: %s\n", first_bad.c_str());
}

}  // namespace

int main() {
  run_one("class-equalities", 300.0);
  run_one("qf-dollar-lemma");
  run_one("kurahashi");
  run_one("fv-preservation");
  run_one("a-collapse");
  run_one("witness-directions");
  run_one("prenex-contracts");
  run_one("dual-involution");
  run_roundtrip();
  std::printf("acceptance: %d of 9 criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
