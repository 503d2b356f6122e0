// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: single solves, seeded benchmarks, exhaustive
// optima for small instances, and synthetic instance generation.
//
// Exit codes: 0 success, 1 configuration or parse error, 2 I/O error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submod/brute_force.h"
#include "submod/error.h"
#include "submod/experiment.h"
#include "submod/loaders.h"
#include "submod/objectives.h"
#include "submod/report.h"
#include "submod/synthetic.h"

namespace {

using submod::Error;
using submod::ErrorKind;

struct InstanceOptions {
  std::string objective = "cut";
  std::string data;
  double lambda = 0.75;
  int n = 0;
  double density = 0.5;
  int dim = 25;
  uint64_t instance_seed = 1;
};

struct SolveOptions {
  std::vector<int> ks;
  std::vector<std::string> algos;
  double eps = 0.1;
  double ts = submod::kDefaultFlipPoint;
  std::string p_mode = "practical";
  int reps = 8;
  uint64_t seed = 0;
  int threads = 1;
  std::string out;
  std::string summary;
  std::string svg;
};

void AddInstanceOptions(CLI::App* app, InstanceOptions& opt) {
  app->add_option("--objective", opt.objective, "coverage, facility or cut")
      ->check(CLI::IsMember({"coverage", "facility", "cut"}));
  app->add_option("--data", opt.data,
                  "similarity CSV (coverage/facility) or edge list (cut)");
  app->add_option("--lambda", opt.lambda, "coverage-diversity trade-off");
  app->add_option("--n", opt.n, "synthetic instance size (without --data)");
  app->add_option("--density", opt.density, "synthetic edge probability");
  app->add_option("--dim", opt.dim, "synthetic feature dimension");
  app->add_option("--instance-seed", opt.instance_seed,
                  "seed of the synthetic instance");
}

submod::Instance BuildInstance(const InstanceOptions& opt) {
  const submod::ObjectiveKind kind = submod::ParseObjectiveKind(opt.objective);
  if (!opt.data.empty()) {
    std::vector<std::string> warnings;
    submod::Instance inst =
        kind == submod::ObjectiveKind::kGraphCut
            ? submod::LoadEdgeList(opt.data, &warnings)
            : submod::LoadSimilarityCsv(opt.data, kind, opt.lambda, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return inst;
  }
  if (opt.n < 2) {
    throw Error(ErrorKind::kConfig, "pass --data or a synthetic --n >= 2");
  }
  submod::SyntheticSpec spec;
  spec.kind = kind;
  spec.n = opt.n;
  spec.density = opt.density;
  spec.lambda = opt.lambda;
  spec.dim = opt.dim;
  submod::RngStream rng(opt.instance_seed);
  return submod::GenSynthetic(spec, rng);
}

void AddSolverOptions(CLI::App* app, SolveOptions& opt, bool sweep) {
  if (sweep) {
    app->add_option("--k", opt.ks, "cardinality bounds (comma list)")
        ->delimiter(',')
        ->required();
    app->add_option("--algo", opt.algos, "algorithms (comma list)")
        ->delimiter(',');
    app->add_option("--reps", opt.reps, "repetitions per (algo, k)");
    app->add_option("--threads", opt.threads, "worker threads");
    app->add_option("--summary", opt.summary, "summary CSV path");
    app->add_option("--svg", opt.svg, "value-vs-k chart path");
  } else {
    opt.ks.assign(1, 0);
    opt.algos.assign(1, "main");
    app->add_option("--k", opt.ks[0], "cardinality bound")->required();
    app->add_option("--algo", opt.algos[0], "algorithm");
  }
  app->add_option("--eps", opt.eps, "accuracy in (0, 1)");
  app->add_option("--ts", opt.ts, "flip point in [0, 1]");
  app->add_option("--p-mode", opt.p_mode, "theoretical or practical")
      ->check(CLI::IsMember({"theoretical", "practical"}));
  app->add_option("--seed", opt.seed, "master seed");
  app->add_option("--out", opt.out, "run records CSV path");
}

submod::ExperimentSpec MakeSpec(const SolveOptions& opt) {
  submod::ExperimentSpec spec;
  for (const auto& name : opt.algos) spec.algos.push_back(submod::ParseAlgo(name));
  spec.ks = opt.ks;
  spec.eps = opt.eps;
  spec.ts = opt.ts;
  spec.p_mode = submod::ParsePMode(opt.p_mode);
  spec.reps = opt.reps;
  spec.master_seed = opt.seed;
  spec.threads = opt.threads;
  return spec;
}

void PrintSummary(const std::vector<submod::SummaryRow>& rows) {
  std::printf("%-14s %6s %14s %14s %14s %8s\n", "algo", "k", "mean_value",
              "std_value", "mean_queries", "failed");
  for (const auto& r : rows) {
    std::printf("%-14s %6d %14.6g %14.6g %14.6g %8.3f\n", r.algo.c_str(), r.k,
                r.mean_value, r.std_value, r.mean_queries, r.failure_rate);
  }
}

int RunSolve(const InstanceOptions& iopt, const SolveOptions& opt) {
  const submod::Instance inst = BuildInstance(iopt);
  submod::SolverConfig cfg;
  cfg.k = opt.ks[0];
  cfg.eps = opt.eps;
  cfg.ts = opt.ts;
  cfg.p_mode = submod::ParsePMode(opt.p_mode);
  cfg.seed = opt.seed;
  cfg.Validate();

  const submod::InstanceObjective objective(inst);
  submod::OracleHandle handle(objective,
                              submod::MakeGroundSet(inst.n_real(), cfg.k));
  submod::RngStream rng(cfg.seed);
  const submod::Algo algo = submod::ParseAlgo(opt.algos[0]);
  const submod::RunOutcome outcome =
      submod::RunAlgorithm(algo, handle, cfg, rng);
  const double value = objective.Evaluate(outcome.solution.elements());

  std::cout << "algo " << submod::AlgoName(algo) << "\n"
            << "value " << submod::FormatReal(value) << "\n"
            << "queries " << handle.queries() << "\n"
            << "failed " << (outcome.failed ? 1 : 0) << "\n"
            << "set";
  for (int id : outcome.solution.Sorted()) std::cout << ' ' << id;
  std::cout << "\n";

  if (!opt.out.empty()) {
    submod::RunRecord record;
    record.algo = submod::AlgoName(algo);
    record.k = cfg.k;
    record.seed = cfg.seed;
    record.value = value;
    record.queries = handle.queries();
    record.failed = outcome.failed;
    const std::vector<submod::RunRecord> records{record};
    submod::WriteRecordsCsv(records, opt.out);
  }
  return 0;
}

int RunBench(const InstanceOptions& iopt, const SolveOptions& opt) {
  const submod::Instance inst = BuildInstance(iopt);
  submod::ExperimentSpec spec = MakeSpec(opt);
  if (spec.algos.empty()) {
    spec.algos = {submod::Algo::kMain, submod::Algo::kRandomGreedy,
                  submod::Algo::kSampleGreedy};
  }
  const auto records = submod::RunExperiment(inst, spec);
  const auto rows = submod::Summarize(records);
  PrintSummary(rows);
  if (!opt.out.empty()) submod::WriteRecordsCsv(records, opt.out);
  if (!opt.summary.empty()) submod::WriteSummaryCsv(rows, opt.summary);
  if (!opt.svg.empty()) submod::RenderSvg(rows, opt.svg);
  return 0;
}

int RunBruteForce(const InstanceOptions& iopt, int k,
                  const std::string& out) {
  const submod::Instance inst = BuildInstance(iopt);
  const submod::InstanceObjective objective(inst);
  submod::OracleHandle handle(objective,
                              submod::MakeGroundSet(inst.n_real(), k));
  const submod::OptCertificate cert = submod::BruteForceOpt(handle, k);
  std::ostringstream text;
  text << "value " << submod::FormatReal(cert.opt_value) << "\n"
       << "enumerated " << cert.enumerated << "\n"
       << "set";
  for (int id : cert.opt_set.Sorted()) text << ' ' << id;
  text << "\n";
  std::cout << text.str();
  if (!out.empty()) {
    std::ofstream file(out);
    if (!(file << text.str())) {
      throw Error(ErrorKind::kIo, "cannot write '" + out + "'");
    }
  }
  return 0;
}

int RunGen(const InstanceOptions& iopt, const std::string& out) {
  if (!iopt.data.empty()) {
    throw Error(ErrorKind::kConfig, "gen does not take --data");
  }
  submod::WriteInstance(BuildInstance(iopt), out);
  return 0;
}

// CLI11 only reads config files on the root app, so `bench --config F` is
// rewritten to `--config F bench`.
std::vector<std::string> HoistConfigFlag(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (size_t i = 0; i < args.size(); ++i) {
    const bool split = args[i] == "--config" && i + 1 < args.size();
    const bool joined = args[i].rfind("--config=", 0) == 0;
    if (!split && !joined) continue;
    std::vector<std::string> flag(args.begin() + i,
                                  args.begin() + i + (split ? 2 : 1));
    args.erase(args.begin() + i, args.begin() + i + flag.size());
    args.insert(args.begin(), flag.begin(), flag.end());
    break;
  }
  std::reverse(args.begin(), args.end());  // CLI11 takes a reversed vector
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cardinality-constrained submodular maximization", "submod_cli"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "INI file; bench flags go under a [bench] section");

  InstanceOptions solve_inst, bench_inst, brute_inst, gen_inst;
  SolveOptions solve_opt, bench_opt;
  int brute_k = 1;
  std::string brute_out, gen_out;

  CLI::App* solve = app.add_subcommand("solve", "run one solver once");
  AddInstanceOptions(solve, solve_inst);
  AddSolverOptions(solve, solve_opt, /*sweep=*/false);

  CLI::App* bench =
      app.add_subcommand("bench", "seeded sweep over algorithms and k");
  AddInstanceOptions(bench, bench_inst);
  AddSolverOptions(bench, bench_opt, /*sweep=*/true);

  CLI::App* brute =
      app.add_subcommand("bruteforce", "exhaustive optimum (n <= 24)");
  AddInstanceOptions(brute, brute_inst);
  brute->add_option("--k", brute_k, "cardinality bound")->required();
  brute->add_option("--out", brute_out, "certificate path");

  CLI::App* gen = app.add_subcommand("gen", "write a synthetic instance");
  AddInstanceOptions(gen, gen_inst);
  gen->add_option("--out", gen_out, "output path")->required();

  try {
    app.parse(HoistConfigFlag(argc, argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*solve) return RunSolve(solve_inst, solve_opt);
    if (*bench) return RunBench(bench_inst, bench_opt);
    if (*brute) return RunBruteForce(brute_inst, brute_k, brute_out);
    if (*gen) return RunGen(gen_inst, gen_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kIo ? 2 : 1;
  }
  return 1;
}
