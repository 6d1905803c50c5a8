#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"

namespace {

struct CliResult {
  int code = -1;
  std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("HLAB_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "HLAB_CLI must point at the hlab binary");
  std::string cmd =
      (env.empty() ? "" : env + " ") + std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("classify reports ranks as compact json by default") {
  CliResult r = run_cli("classify 'exists x. forall y. p'");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["degree"] == 2);
  CHECK(j["cap"] == 4);
  CHECK(j["alt"] == nlohmann::json::array({"+-"}));
  CHECK(j["classes"]["Sigma"] == 2);
  CHECK(j["classes"]["E"] == 2);
  CHECK_FALSE(j["classes"].contains("Pi"));
}

TEST_CASE("classify text format lists the minima line by line") {
  CliResult r = run_cli("classify --format text 'exists x. forall y. p'");
  REQUIRE(r.code == 0);
  CHECK(r.output.find("degree: 2") != std::string::npos);
  CHECK(r.output.find("Sigma: 2") != std::string::npos);
}

TEST_CASE("translate prints the frozen double negation form") {
  CliResult r = run_cli("translate --kind dollar 'exists x. p'");
  REQUIRE(r.code == 0);
  CHECK(r.output == "((exists x. ((p -> $) -> $)) -> $) -> $\n");
}

TEST_CASE("witness names the class its output lands in") {
  CliResult r = run_cli(
      "witness --lemma u-epi --rank 2 --format json 'forall x. exists y. q(y)'");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.contains("witness"));
  CHECK(j["target_class"]["family"] == "EPi");
  CHECK(j["target_class"]["rank"] == 2);
}

TEST_CASE("scheme builds instances from payload formulas") {
  CliResult lem = run_cli("scheme --name LEM 'q(x)'");
  REQUIRE(lem.code == 0);
  CHECK(lem.output == "q(x) \\/ ~q(x)\n");
  CliResult cd = run_cli("scheme --name CD --var x 'q(y)' 'q(x)'");
  REQUIRE(cd.code == 0);
  CHECK(cd.output.find("forall x. q(y) \\/ q(x)") != std::string::npos);
  CliResult blocked = run_cli("scheme --name CD --var x 'q(x)' 'q(x)'");
  CHECK(blocked.code == 1);
}

TEST_CASE("enumerate streams the bounded pool in frozen order") {
  CliResult r = run_cli("enumerate --max-size 1");
  REQUIRE(r.code == 0);
  CHECK(r.output == "p\nq(x)\nbot\n");
  CliResult capped = run_cli("enumerate --max-size 11");
  CHECK(capped.code == 2);
}

TEST_CASE("check runs a named suite and summarizes it") {
  CliResult r = run_cli("check --suite class-equalities --max-size 5");
  REQUIRE(r.code == 0);
  CHECK(r.output == "class-equalities: checked=4452 failures=0 PASS\n");
  CliResult unknown = run_cli("check --suite nope");
  CHECK(unknown.code == 2);
}

TEST_CASE("check emits a structured report when asked") {
  CliResult r = run_cli("check --suite fv-preservation --max-size 5 --format json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["suite"] == "fv-preservation");
  CHECK(j["checked"] == 5);
  CHECK(j["failures"].empty());
}

TEST_CASE("the seed variable reproduces sampled runs bit for bit") {
  CliResult a = run_cli("check --suite kurahashi --max-size 2",
                        "HIERARCHY_LAB_SEED=7");
  CliResult b = run_cli("check --suite kurahashi --max-size 2",
                        "HIERARCHY_LAB_SEED=7");
  REQUIRE(a.code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("checked=24") != std::string::npos);
}

TEST_CASE("usage problems exit 2 and show the grammar") {
  CliResult bad_flag = run_cli("classify --no-such-flag p");
  CHECK(bad_flag.code == 2);

  CliResult bad_formula = run_cli("classify 'exists x.'");
  CHECK(bad_formula.code == 2);
  CHECK(bad_formula.output.find("parse error at") != std::string::npos);
  CHECK(bad_formula.output.find("formula syntax:") != std::string::npos);

  CliResult no_payload = run_cli("classify");
  CHECK(no_payload.code == 2);
}

TEST_CASE("domain violations exit 1") {
  CliResult r = run_cli("prenex --rank 1 'exists x. forall y. p'");
  CHECK(r.code == 1);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("batch files process line by line") {
  const char* path = "/tmp/hlab_cli_batch.txt";
  {
    std::ofstream out(path);
    out << "p -> q\n\nforall x. q(x)\n";
  }
  CliResult r = run_cli(std::string("classify --file ") + path);
  REQUIRE(r.code == 0);
  CHECK(count_lines(r.output) == 2);

  {
    std::ofstream out(path);
    out << "p\nexists x.\n";
  }
  CliResult bad = run_cli(std::string("classify --file ") + path);
  CHECK(bad.code == 2);
  CHECK(bad.output.find("line 2:") != std::string::npos);
}

TEST_CASE("a signature file swaps in custom predicates") {
  const char* path = "/tmp/hlab_cli_sig.json";
  {
    std::ofstream out(path);
    out << "{\"predicates\": {\"edge\": [2]}}";
  }
  CliResult ok = run_cli(std::string("classify --sig ") + path +
                         " 'forall x y. edge(x, y)'");
  CHECK(ok.code == 0);
  CliResult gone = run_cli(std::string("classify --sig ") + path + " 'p'");
  CHECK(gone.code == 2);
}

TEST_CASE("version and help are available") {
  CliResult v = run_cli("--version");
  CHECK(v.code == 0);
  CHECK(v.output.find("hlab") != std::string::npos);
  CliResult h = run_cli("--help");
  CHECK(h.code == 0);
  CHECK(h.output.find("classify") != std::string::npos);
}
