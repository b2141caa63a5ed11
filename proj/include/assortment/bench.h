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

// Benchmark harness: generates instances, runs both solvers, and compares
// them with the exhaustive oracles whenever the instance fits the oracle
// budget. Trials outside the budget are reported as "uncertified".

#ifndef ASSORTMENT_BENCH_H_
#define ASSORTMENT_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assortment/error.h"
#include "assortment/generator.h"
#include "assortment/instance_io.h"
#include "assortment/oracle.h"
#include "assortment/submodular_max.h"

namespace assortment {

struct BenchConfig {
  GeneratorConfig generator;
  OracleBudget budget;
  MaximizerOptions maximizer;
  double tolerance = kRevenueTolerance;
};

// The generator keys plus "oracle_budget" ({max_products, max_positions,
// max_elements}) and "local_search" (bool). Throws kConfigError.
BenchConfig parse_bench_config(std::string_view text);

struct BoundCheck {
  std::string name;
  bool passed = true;
  double lhs = 0.0;  // achieved
  double rhs = 0.0;  // required, tolerance not included
};

struct TrialResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t n_organic = 0;
  std::size_t n_sponsored = 0;
  std::size_t k = 0;
  std::string constraint;
  bool certified = false;

  std::optional<ErrorCode> error;
  std::string error_message;

  double exact_revenue = 0.0;
  double candidate_one = 0.0;   // f(pi^I)
  double candidate_two = 0.0;   // f(pi^II)
  double best = 0.0;
  double beta_impl = 0.0;
  double w0_prime = 0.0;
  double organic_revenue = 0.0;  // f'(pi^p5) under w0_prime
  bool feasible = true;          // constrained answer passes check_feasible

  // Oracle comparisons (certified trials only).
  double oracle_p0 = 0.0;
  double oracle_p2 = 0.0;
  double part_sponsored = 0.0;
  double part_organic = 0.0;
  double oracle_p5 = 0.0;
  double beta_inst = 1.0;
  double combined_ratio = 1.0;
  double combined_bound = 0.0;
  std::vector<BoundCheck> checks;

  bool ok() const;
};

// Runs one trial; never throws for solver errors (they are recorded).
TrialResult run_trial(const BenchConfig& cfg, std::size_t index);

struct Quantiles {
  double min = 0.0;
  double p10 = 0.0;
  double p50 = 0.0;
  double p90 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

// Linear interpolation between order statistics. Empty input yields zeros.
Quantiles quantiles(std::vector<double> values);

struct BenchReport {
  BenchConfig config;
  std::size_t trials = 0;
  std::vector<TrialResult> results;  // ordered by trial index
};

// Trials are independent and may run on `jobs` threads; the report does not
// depend on the thread count.
BenchReport run_bench(const BenchConfig& cfg, std::size_t trials,
                      std::size_t jobs = 1);

Json bench_report_to_json(const BenchReport& report);

// 0 when every trial passed, 1 when a bound check or feasibility check
// failed, 3 when a trial hit a solver error.
int bench_exit_code(const BenchReport& report);

}  // namespace assortment

#endif  // ASSORTMENT_BENCH_H_
