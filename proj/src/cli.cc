// Copyright 2026 The Sponsored Assortment Authors
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

#include "assortment/cli.h"

#include <algorithm>
#include <cstdint>
#include <optional>

#include <CLI11.hpp>

#include "assortment/bench.h"
#include "assortment/constrained_solver.h"
#include "assortment/exact_solver.h"
#include "assortment/generator.h"
#include "assortment/instance_io.h"
#include "assortment/kernels.h"
#include "assortment/oracle.h"

namespace assortment {
namespace {

struct Options {
  double tolerance = kRevenueTolerance;
  std::optional<std::uint64_t> seed;
  std::string kernels = "auto";

  bool exact = false;
  bool constrained = false;
  bool local_search = false;
  std::string instance_path;
  std::string placement_path;

  std::string problem = "p0";
  std::size_t max_products = OracleBudget{}.max_products;
  std::size_t max_positions = OracleBudget{}.max_positions;

  std::string config_path;
  std::size_t trials = 0;
  std::size_t jobs = 1;
};

void Emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

void SelectKernels(const std::string& name, std::ostream& err) {
  if (name == "auto") return;
  const kernels::Backend backend =
      name == "scalar" ? kernels::Backend::kScalar : kernels::Backend::kAvx2;
  if (!kernels::set_backend(backend)) {
    throw Error(ErrorCode::kInvalidArgument,
                "kernel backend '" + name + "' is not available on this CPU");
  }
  err << "assortment: kernels=" << kernels::BackendName(backend) << "\n";
}

int Solve(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.exact == o.constrained) {
    throw Error(ErrorCode::kInvalidArgument,
                "solve needs exactly one of --exact or --constrained");
  }
  const Instance inst = parse_instance(read_file(o.instance_path));
  if (o.exact) {
    ExactSolverOptions options;
    options.tolerance = o.tolerance;
    const ExactSolution sol = solve_exact(inst, options);
    err << "assortment: exact revenue " << sol.revenue << " after "
        << sol.trace.iterations.size() << " parametric steps\n";
    Emit(out, exact_report_to_json(inst, sol));
    return 0;
  }
  MaximizerOptions options;
  options.local_search = o.local_search;
  const CombinedReport rep = solve_constrained(inst, options);
  err << "assortment: constrained revenue " << rep.best.revenue << " ("
      << CandidateRoleName(rep.best.role) << ")\n";
  Emit(out, combined_report_to_json(inst, rep));
  return 0;
}

int Oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(o.instance_path));
  OracleBudget budget;
  budget.max_products = o.max_products;
  budget.max_positions = o.max_positions;
  if (o.problem == "p0") {
    const OracleSolution sol = oracle_p0(inst, budget);
    err << "assortment: oracle p0 revenue " << sol.revenue << "\n";
    Emit(out, oracle_p0_to_json(inst, sol));
  } else {
    const DecomposedSolution sol = oracle_p2(inst, budget);
    err << "assortment: oracle p2 revenue " << sol.revenue << "\n";
    Emit(out, oracle_p2_to_json(inst, sol));
  }
  return 0;
}

int Check(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(o.instance_path));
  const Placement pl = parse_placement(inst, read_file(o.placement_path));
  const FeasibilityVerdict verdict = check_feasible(inst, pl);
  err << "assortment: " << verdict.violations.size() << " violation(s)\n";
  Emit(out, verdict_to_json(inst, pl, verdict));
  return verdict.ok() ? 0 : 1;
}

int Bench(const Options& o, std::ostream& out, std::ostream& err) {
  BenchConfig cfg = parse_bench_config(read_file(o.config_path));
  if (o.seed) cfg.generator.seed = *o.seed;
  cfg.tolerance = o.tolerance;
  const BenchReport report = run_bench(cfg, o.trials, o.jobs);
  const int code = bench_exit_code(report);
  err << "assortment: bench finished " << o.trials << " trial(s), exit " << code
      << "\n";
  Emit(out, bench_report_to_json(report));
  return code;
}

int Generate(const Options& o, std::ostream& out, std::ostream&) {
  GeneratorConfig cfg = parse_generator_config(read_file(o.config_path));
  if (o.seed) cfg.seed = *o.seed;
  out << serialize_instance(generate(cfg));
  return 0;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kValidationError:
    case ErrorCode::kConfigError:
    case ErrorCode::kInvalidArgument:
      return 2;
    case ErrorCode::kInfeasibleSponsoredAssignment:
    case ErrorCode::kInvalidPlacement:
    case ErrorCode::kNoPerfectMatching:
    case ErrorCode::kProductNotPlaced:
      return 1;
    case ErrorCode::kConvergenceFailure:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kGroundSetTooLarge:
    case ErrorCode::kProductNotInSet:
      return 3;
  }
  return 3;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Sponsored/organic assortment solver", "assortment"};
  app.require_subcommand(1);
  app.add_option("--tolerance", o.tolerance, "Revenue tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Override the generator seed");
  app.add_option("--kernels", o.kernels, "Assignment kernels")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
  auto* exact = solve->add_flag("--exact", o.exact, "Unconstrained exact solver");
  auto* constrained = solve->add_flag("--constrained", o.constrained,
                                      "Approximate solver for constrained organics");
  exact->excludes(constrained);
  solve->add_flag("--local-search", o.local_search,
                  "Polish the organic step with local search");
  solve->add_option("file", o.instance_path, "Instance JSON")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive optimum");
  oracle->add_option("file", o.instance_path, "Instance JSON")->required();
  oracle->add_option("--problem", o.problem, "p0 or p2")
      ->check(CLI::IsMember({"p0", "p2"}));
  oracle->add_option("--max-products", o.max_products, "Oracle budget");
  oracle->add_option("--max-positions", o.max_positions, "Oracle budget");

  CLI::App* check = app.add_subcommand("check", "Check a placement");
  check->add_option("file", o.instance_path, "Instance JSON")->required();
  check->add_option("placement", o.placement_path, "Placement JSON")->required();

  CLI::App* bench = app.add_subcommand("bench", "Generated benchmark");
  bench->add_option("--config", o.config_path, "Bench config JSON")->required();
  bench->add_option("--trials", o.trials, "Number of trials")->required();
  bench->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI::App* gen = app.add_subcommand("generate", "Print a generated instance");
  gen->add_option("--config", o.config_path, "Generator config JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "assortment: " << e.what() << "\n";
    Emit(out, error_to_json(ErrorCode::kInvalidArgument, e.what()));
    return 2;
  }

  try {
    SelectKernels(o.kernels, err);
    if (solve->parsed()) return Solve(o, out, err);
    if (oracle->parsed()) return Oracle(o, out, err);
    if (check->parsed()) return Check(o, out, err);
    if (bench->parsed()) return Bench(o, out, err);
    return Generate(o, out, err);
  } catch (const Error& e) {
    err << "assortment: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    Emit(out, error_to_json(e.code(), e.what()));
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "assortment: internal error: " << e.what() << "\n";
    Emit(out, {{"error", {{"code", "Internal"}, {"message", e.what()}}}});
    return 3;
  }
}

}  // namespace assortment
