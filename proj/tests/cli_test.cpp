// End-to-end runs of the installed command line tool. Every test shells out
// to the real binary (path injected by the build) and checks exit codes and
// byte-level output, so this is also where the documented interface is pinned.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

const std::string kCli = SSMC_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = kCli + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  res.exit_code = WEXITSTATUS(status);
  return res;
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "ssmc_cli_test";
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string file_with(const std::string& name, const std::string& content) {
  fs::path p = scratch() / name;
  std::ofstream(p) << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  buf << std::ifstream(path).rdbuf();
  return buf.str();
}

const std::string kTwoDoctors =
    "doctors: a b\n"
    "hospitals: x y\n"
    "pref a: x > y\n"
    "pref b: x\n"
    "pref x: b > a\n"
    "pref y: a\n";

const std::string kTiedFight =
    "doctors: a b\n"
    "hospitals: x\n"
    "pref a: x\n"
    "pref b: x\n"
    "pref x: a = b\n";

const std::string kHandover =
    "doctors: a b c\n"
    "hospitals: s x\n"
    "closed: s\n"
    "pref a: x\n"
    "pref b: x\n"
    "pref c: s > x\n"
    "pref s: c\n"
    "pref x: c > a = b\n";

const std::string kHallBlock =
    "doctors: a b c\n"
    "hospitals: x y\n"
    "pref a: x\n"
    "pref b: x\n"
    "pref c: x = y\n"
    "pref x: a = b = c\n"
    "pref y: c\n";

const std::string kSampleFormula =
    "p b2sat 3 4\n"
    "1 2 3 0\n"
    "-1 -2 -3 0\n"
    "1 -2 3 0\n"
    "-1 2 -3 0\n";

}  // namespace

TEST_CASE("solve prints the matching and names the method on stderr") {
  std::string in = file_with("two.txt", kTwoDoctors);
  std::string err = (scratch() / "two.err").string();

  RunResult res = run("solve --input " + in + " 2>" + err);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "status: stable\na y\nb x\n");
  CHECK(slurp(err) == "method: separated\n");
}

TEST_CASE("solve answers none with exit code one") {
  std::string in = file_with("tied.txt", kTiedFight);
  RunResult res = run("solve --input " + in + " 2>/dev/null");
  CHECK(res.exit_code == 1);
  CHECK(res.out == "status: none\n");
}

TEST_CASE("auto method selection falls back by instance shape") {
  std::string in = file_with("handover.txt", kHandover);
  std::string err = (scratch() / "handover.err").string();

  RunResult res = run("solve --input " + in + " 2>" + err);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "status: stable\nc x\n");
  CHECK(slurp(err) == "method: degree2\n");
}

TEST_CASE("method preconditions map to exit code three") {
  std::string in = file_with("handover.txt", kHandover);

  RunResult sep = run("solve --input " + in + " --method separated 2>/dev/null");
  CHECK(sep.exit_code == 3);

  RunResult brute = run("solve --input " + in + " --method brute --budget 2 2>/dev/null");
  CHECK(brute.exit_code == 3);
}

TEST_CASE("unreadable or malformed input is exit code two") {
  CHECK(run("solve --input " + (scratch() / "missing.txt").string() + " 2>/dev/null").exit_code ==
        2);
  std::string bad = file_with("bad.txt", "doctors a b\n");
  CHECK(run("solve --input " + bad + " 2>/dev/null").exit_code == 2);
}

TEST_CASE("check accepts a solve result document unchanged") {
  std::string in = file_with("two.txt", kTwoDoctors);
  std::string res_path = (scratch() / "two.res").string();
  REQUIRE(run("solve --input " + in + " --output " + res_path + " 2>/dev/null").exit_code == 0);

  RunResult ok = run("check --input " + in + " --matching " + res_path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.empty());
}

TEST_CASE("check lists the destabilizing edges") {
  std::string in = file_with("two.txt", kTwoDoctors);
  std::string mu = file_with("two.mu", "a x\n");

  RunResult res = run("check --input " + in + " --matching " + mu);
  CHECK(res.exit_code == 1);
  CHECK(res.out == "blocking: b x doctor=strong hospital=strong\n");
}

TEST_CASE("check refuses a result document without a matching") {
  std::string in = file_with("tied.txt", kTiedFight);
  std::string doc = file_with("none.res", "status: none\n");
  CHECK(run("check --input " + in + " --matching " + doc + " 2>/dev/null").exit_code == 2);
}

TEST_CASE("check requires the instance option") {
  CHECK(run("check 2>/dev/null </dev/null").exit_code == 2);
}

TEST_CASE("preprocess reports sections and growth steps") {
  std::string in = file_with("hallblock.txt", kHallBlock);
  RunResult res = run("preprocess --input " + in + " --trace");
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "forbidden:\n"
        "a x\n"
        "b x\n"
        "c x\n"
        "matching:\n"
        "c y\n"
        "flat:\n"
        "c y\n"
        "critical:\n"
        "x\n"
        "step 1.1 hall: a x, b x\n"
        "step 1.2 block a x: c x\n");

  RunResult quiet = run("preprocess --input " + in);
  CHECK(quiet.exit_code == 0);
  CHECK(quiet.out.find("step") == std::string::npos);
}

TEST_CASE("reduce sat writes the instance and the name map") {
  std::string cnf = file_with("sample.cnf", kSampleFormula);
  std::string map_path = (scratch() / "sample.map").string();

  RunResult res = run("reduce sat --cnf " + cnf + " --map " + map_path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("pref h_1.1: d_1.1 = d_1.2\n") != std::string::npos);
  CHECK(res.out.find("t_1") != std::string::npos);

  std::string map = slurp(map_path);
  CHECK(map.find("# reduction name map\n") != std::string::npos);
  CHECK(map.find("var 1: d1=d_1.1 d2=d_1.2 h1=h_1.1 t=t_1 f=f_1\n") != std::string::npos);
}

TEST_CASE("reduce sat warns about clauses holding a literal and its negation") {
  std::string cnf = file_with("compl.cnf",
                              "p b2sat 3 4\n"
                              "1 -3 -2 0\n"
                              "2 3 -2 0\n"
                              "3 -1 -3 0\n"
                              "1 -1 2 0\n");
  std::string err = (scratch() / "compl.err").string();

  RunResult res = run("reduce sat --cnf " + cnf + " --output /dev/null 2>" + err);
  CHECK(res.exit_code == 0);
  std::string warnings = slurp(err);
  CHECK(warnings.find("warning: clause 3") != std::string::npos);
  CHECK(warnings.find("warning: clause 4") != std::string::npos);
}

TEST_CASE("reduce envy closes every hospital") {
  std::string in = file_with("envy.txt",
                             "doctors: a b\n"
                             "hospitals: x\n"
                             "pref a: x\n"
                             "pref b: x\n");
  RunResult res = run("reduce envy --input " + in);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("closed: x\n") != std::string::npos);
  CHECK(res.out.find("pref x: a = b\n") != std::string::npos);
}

TEST_CASE("gen is deterministic per seed") {
  std::string args = "gen instance --seed 5 --doctors 6 --hospitals 5";
  RunResult first = run(args);
  RunResult second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out != run("gen instance --seed 6 --doctors 6 --hospitals 5").out);
}

TEST_CASE("gen b2sat rejects variable counts off the grid") {
  CHECK(run("gen b2sat --vars 5 2>/dev/null").exit_code == 2);
}

TEST_CASE("verify prints the tallies") {
  RunResult res = run("verify --mode bipartite --trials 5 --seed 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out ==
        "suite: bipartite\n"
        "trials: 5\n"
        "failures: 0\n"
        "samples: 50\n");

  CHECK(run("verify --mode nonsense 2>/dev/null").exit_code == 2);
}

TEST_CASE("bare invocation and help") {
  CHECK(run("2>/dev/null").exit_code == 2);
  RunResult help = run("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("solve") != std::string::npos);
}
