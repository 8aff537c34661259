#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ssmc/verify.hpp"

namespace {

using namespace ssmc;

// Exit codes: 0 positive answer / check passed, 1 negative answer (still a
// valid result), 2 usage or input problem, 3 method precondition violated,
// 4 a bug in this program.
enum { exit_yes = 0, exit_no = 1, exit_usage = 2, exit_method = 3, exit_bug = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

bool degree_at_most_two(const Instance& inst) {
  for (int d = 0; d < inst.num_doctors(); ++d)
    if (inst.doctor_edges(d).size() > 2) return false;
  return true;
}

struct SolveArgs {
  std::string input = "-";
  std::string output;
  std::string method = "auto";
  int budget = 22;
};

int run_solve(const SolveArgs& args) {
  Instance inst = Instance::parse(read_text(args.input));
  OracleBudget budget;
  budget.max_edges = args.budget;

  std::string method = args.method;
  if (method == "auto") {
    if (satisfies_star(inst))
      method = "separated";
    else if (degree_at_most_two(inst))
      method = "degree2";
    else if (inst.num_edges() <= budget.max_edges)
      method = "brute";
    else
      fail(errc::budget, "no method applies: the open/closed split is mixed, a doctor has three "
                         "or more options, and the instance is too large to enumerate");
  }

  std::optional<Matching> got;
  if (method == "separated") {
    got = solve_separated(inst);
  } else if (method == "degree2") {
    got = solve_degree2(inst);
  } else {
    std::vector<Matching> all = all_stable_matchings(inst, budget);
    if (!all.empty()) got = all.front();
  }

  std::cerr << "method: " << method << "\n";
  std::string doc = got ? "status: stable\n" + got->serialize(inst) : std::string("status: none\n");
  write_text(args.output, doc);
  return got ? exit_yes : exit_no;
}

struct CheckArgs {
  std::string input;
  std::string matching = "-";
};

int run_check(const CheckArgs& args) {
  Instance inst = Instance::parse(read_text(args.input));
  std::string text = read_text(args.matching);

  // Accept a solve result document as-is.
  if (text.rfind("status:", 0) == 0) {
    size_t eol = text.find('\n');
    std::string status = text.substr(7, eol == std::string::npos ? std::string::npos : eol - 7);
    status.erase(0, status.find_first_not_of(" \t"));
    if (status != "stable")
      throw UsageError("document carries no matching (status: " + status + ")");
    text = eol == std::string::npos ? std::string() : text.substr(eol + 1);
  }

  Matching mu = Matching::parse(inst, text);
  std::vector<BlockReport> blocks = blocking_edges(inst, mu);
  for (const BlockReport& b : blocks) {
    const Edge& e = inst.edge(b.edge);
    std::cout << "blocking: " << inst.doctor_name(e.doctor) << ' '
              << inst.hospital_name(e.hospital)
              << " doctor=" << (b.strong_doctor ? "strong" : "weak")
              << " hospital=" << (b.strong_hospital ? "strong" : "weak") << "\n";
  }
  return blocks.empty() ? exit_yes : exit_no;
}

struct PreprocessArgs {
  std::string input = "-";
  std::string output;
  bool trace = false;
};

int run_preprocess(const PreprocessArgs& args) {
  Instance inst = Instance::parse(read_text(args.input));
  PreprocessResult pre = preprocess(inst, args.trace);

  std::ostringstream out;
  auto edge_lines = [&](const std::vector<int>& ids) {
    for (int eid : ids) out << inst.edge_label(eid) << "\n";
  };
  out << "forbidden:\n";
  edge_lines(pre.forbidden.ids());
  out << "matching:\n";
  edge_lines(pre.mu.edge_ids());
  out << "flat:\n";
  edge_lines(pre.flat.ids());
  out << "critical:\n";
  for (int h : critical_hospitals(inst, pre)) out << inst.hospital_name(h) << "\n";
  if (args.trace) {
    for (const TraceStep& step : pre.trace) {
      out << "step " << step.round << "." << step.inner << " ";
      switch (step.kind) {
        case TraceStep::Kind::dominated:
          out << "dominated";
          break;
        case TraceStep::Kind::hall_violator:
          out << "hall";
          break;
        case TraceStep::Kind::block_edge:
          out << "block " << inst.edge_label(*step.block_edge);
          break;
      }
      out << ":";
      for (size_t i = 0; i < step.added.size(); ++i)
        out << (i ? ", " : " ") << inst.edge_label(step.added[i]);
      out << "\n";
    }
  }
  write_text(args.output, out.str());
  return exit_yes;
}

struct ReduceSatArgs {
  std::string cnf = "-";
  std::string output;
  std::string map;
};

int run_reduce_sat(const ReduceSatArgs& args) {
  B2Formula f = B2Formula::parse(read_text(args.cnf));
  for (int t : f.complementary_clauses)
    std::cerr << "warning: clause " << t + 1 << " contains a literal and its negation\n";
  auto [inst, map] = reduce_sat(f);
  write_text(args.output, inst.serialize());
  if (!args.map.empty()) write_text(args.map, map.serialize());
  return exit_yes;
}

struct ReduceEnvyArgs {
  std::string input = "-";
  std::string output;
};

int run_reduce_envy(const ReduceEnvyArgs& args) {
  EnvyInstance envy = EnvyInstance::parse(read_text(args.input));
  write_text(args.output, reduce_envyfree(envy).serialize());
  return exit_yes;
}

struct GenArgs {
  GenParams params;
  std::string output;
};

int run_gen_instance(const GenArgs& args) {
  write_text(args.output, gen_instance(args.params).serialize());
  return exit_yes;
}

int run_gen_envy(const GenArgs& args) {
  write_text(args.output, gen_envy(args.params).serialize());
  return exit_yes;
}

struct GenB2SatArgs {
  int vars = 3;
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen_b2sat(const GenB2SatArgs& args) {
  write_text(args.output, gen_b2sat(args.vars, args.seed).serialize());
  return exit_yes;
}

struct VerifyArgs {
  std::string mode;
  std::uint64_t seed = 1;
  int trials = 0;
  int budget = 22;
};

int run_verify(const VerifyArgs& args) {
  VerifyOptions opt;
  opt.seed = args.seed;
  opt.trials = args.trials;
  opt.budget.max_edges = args.budget;
  std::optional<SuiteResult> res = run_suite(args.mode, opt);
  if (!res) throw UsageError("unknown suite '" + args.mode + "'");
  std::cout << "suite: " << res->suite << "\n"
            << "trials: " << res->trials << "\n"
            << "failures: " << res->failures << "\n"
            << "samples: " << res->samples << "\n";
  if (!res->ok()) {
    std::cout << "first failure: " << res->first_failure << "\n" << "counterexample:\n"
              << res->first_counterexample;
    if (!res->first_counterexample.empty() && res->first_counterexample.back() != '\n')
      std::cout << "\n";
  }
  return res->ok() ? exit_yes : exit_no;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable matchings with ties where closed hospitals cannot take new doctors"};
  app.require_subcommand(1);
  std::function<int()> action;

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "decide existence and output a stable matching");
  solve->add_option("--input", solve_args.input, "instance file, - for stdin");
  solve->add_option("--output", solve_args.output, "result file, stdout when omitted");
  solve->add_option("--method", solve_args.method, "auto, separated, degree2, or brute")
      ->check(CLI::IsMember({"auto", "separated", "degree2", "brute"}));
  solve->add_option("--budget", solve_args.budget, "edge cap for the brute method");
  solve->callback([&] { action = [&] { return run_solve(solve_args); }; });

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "report the edges destabilizing a matching");
  check->add_option("--input", check_args.input, "instance file")->required();
  check->add_option("--matching", check_args.matching, "matching file, - (stdin) by default");
  check->callback([&] { action = [&] { return run_check(check_args); }; });

  PreprocessArgs pre_args;
  auto* pre = app.add_subcommand("preprocess", "drop unusable edges and show what remains");
  pre->add_option("--input", pre_args.input, "instance file, - for stdin");
  pre->add_option("--output", pre_args.output, "result file, stdout when omitted");
  pre->add_flag("--trace", pre_args.trace, "append one line per growth step");
  pre->callback([&] { action = [&] { return run_preprocess(pre_args); }; });

  auto* reduce = app.add_subcommand("reduce", "rewrite other problems as matching instances");
  reduce->require_subcommand(1);

  ReduceSatArgs rsat_args;
  auto* rsat = reduce->add_subcommand("sat", "formula to matching instance");
  rsat->add_option("--cnf", rsat_args.cnf, "formula file, - for stdin");
  rsat->add_option("--output", rsat_args.output, "instance file, stdout when omitted");
  rsat->add_option("--map", rsat_args.map, "also write the vertex name map here");
  rsat->callback([&] { action = [&] { return run_reduce_sat(rsat_args); }; });

  ReduceEnvyArgs renvy_args;
  auto* renvy = reduce->add_subcommand("envy", "one-sided lists to matching instance");
  renvy->add_option("--input", renvy_args.input, "preference list file, - for stdin");
  renvy->add_option("--output", renvy_args.output, "instance file, stdout when omitted");
  renvy->callback([&] { action = [&] { return run_reduce_envy(renvy_args); }; });

  auto* gen = app.add_subcommand("gen", "generate seeded random inputs");
  gen->require_subcommand(1);

  GenArgs gi_args;
  auto* gi = gen->add_subcommand("instance", "random matching instance");
  gi->add_option("--seed", gi_args.params.seed, "generator seed");
  gi->add_option("--doctors", gi_args.params.num_doctors, "doctor count");
  gi->add_option("--hospitals", gi_args.params.num_hospitals, "hospital count");
  gi->add_option("--max-degree", gi_args.params.max_degree, "doctor degree cap, -1 for none");
  gi->add_option("--edge-prob", gi_args.params.edge_prob, "edge probability");
  gi->add_option("--tie-prob", gi_args.params.tie_prob, "adjacent rank groups merge probability");
  gi->add_option("--closure-prob", gi_args.params.closure_prob, "hospital closure probability");
  gi->add_flag("--star", gi_args.params.enforce_star,
               "doctors rank every open hospital above every closed one");
  gi->add_flag("--degree2", gi_args.params.enforce_degree2, "cap doctor degree at two");
  gi->add_option("--output", gi_args.output, "instance file, stdout when omitted");
  gi->callback([&] { action = [&] { return run_gen_instance(gi_args); }; });

  GenB2SatArgs gb_args;
  auto* gb = gen->add_subcommand("b2sat", "random occurrence-balanced formula");
  gb->add_option("--vars", gb_args.vars, "variable count, a positive multiple of three");
  gb->add_option("--seed", gb_args.seed, "generator seed");
  gb->add_option("--output", gb_args.output, "formula file, stdout when omitted");
  gb->callback([&] { action = [&] { return run_gen_b2sat(gb_args); }; });

  GenArgs ge_args;
  auto* ge = gen->add_subcommand("envy", "random one-sided preference lists");
  ge->add_option("--seed", ge_args.params.seed, "generator seed");
  ge->add_option("--doctors", ge_args.params.num_doctors, "doctor count");
  ge->add_option("--hospitals", ge_args.params.num_hospitals, "hospital count");
  ge->add_option("--max-degree", ge_args.params.max_degree, "list length cap, -1 for none");
  ge->add_option("--edge-prob", ge_args.params.edge_prob, "listing probability");
  ge->add_option("--tie-prob", ge_args.params.tie_prob, "adjacent rank groups merge probability");
  ge->add_option("--output", ge_args.output, "preference list file, stdout when omitted");
  ge->callback([&] { action = [&] { return run_gen_envy(ge_args); }; });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a randomized oracle-equivalence suite");
  verify->add_option("--mode", verify_args.mode, "which suite to run")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", verify_args.seed, "master seed for the trial stream");
  verify->add_option("--trials", verify_args.trials, "trial count, 0 for the suite default");
  verify->add_option("--budget", verify_args.budget, "edge cap for exhaustive cross-checks");
  verify->callback([&] { action = [&] { return run_verify(verify_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_yes : exit_usage;
  }

  try {
    return action();
  } catch (const InternalError& e) {
    std::cerr << "bug: " << e.what() << "\n";
    return exit_bug;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::star_violated:
      case errc::degree_bound:
      case errc::budget:
        return exit_method;
      default:
        return exit_usage;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "bug: " << e.what() << "\n";
    return exit_bug;
  }
}
