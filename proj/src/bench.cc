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

#include "assortment/bench.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "assortment/constrained_solver.h"
#include "assortment/exact_solver.h"

namespace assortment {
namespace {

[[noreturn]] void Bad(const std::string& key, const std::string& msg) {
  throw Error(ErrorCode::kConfigError, key + ": " + msg);
}

std::size_t ReadSize(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number_unsigned()) Bad(key, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

void AddCheck(TrialResult& t, std::string name, double lhs, double rhs,
              double tol) {
  t.checks.push_back({std::move(name), lhs >= rhs - tol, lhs, rhs});
}

Json QuantilesJson(const Quantiles& q) {
  return {{"min", q.min}, {"p10", q.p10}, {"p50", q.p50},
          {"p90", q.p90}, {"max", q.max}, {"mean", q.mean}};
}

Json TrialJson(const TrialResult& t) {
  Json out = {{"index", t.index},
              {"seed", t.seed},
              {"n_organic", t.n_organic},
              {"n_sponsored", t.n_sponsored},
              {"k", t.k},
              {"constraint", t.constraint},
              {"status", t.error ? "error" : (t.certified ? "certified" : "uncertified")}};
  if (t.error) {
    out["error"] = error_to_json(*t.error, t.error_message)["error"];
    return out;
  }
  out["exact_revenue"] = t.exact_revenue;
  out["candidate_I"] = t.candidate_one;
  out["candidate_II"] = t.candidate_two;
  out["best"] = t.best;
  out["feasible"] = t.feasible;
  out["beta_impl"] = t.beta_impl;
  out["w0_prime"] = t.w0_prime;
  out["organic_revenue"] = t.organic_revenue;
  if (t.certified) {
    out["oracle_p0"] = t.oracle_p0;
    out["oracle_p2"] = t.oracle_p2;
    out["part_sponsored"] = t.part_sponsored;
    out["part_organic"] = t.part_organic;
    out["oracle_p5"] = t.oracle_p5;
    out["beta_inst"] = t.beta_inst;
    out["combined_ratio"] = t.combined_ratio;
    out["combined_bound"] = t.combined_bound;
  }
  Json checks = Json::array();
  for (const auto& c : t.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed},
                      {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  out["checks"] = checks;
  return out;
}

}  // namespace

BenchConfig parse_bench_config(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                std::string("config: malformed JSON (") + e.what() + ")");
  }
  BenchConfig cfg;
  cfg.generator = generator_config_from_json(doc, {"oracle_budget", "local_search"});
  if (auto it = doc.find("oracle_budget"); it != doc.end()) {
    if (!it->is_object()) Bad("oracle_budget", "expected an object");
    for (const auto& item : it->items()) {
      const std::string key = "oracle_budget." + item.key();
      if (item.key() == "max_products") {
        cfg.budget.max_products = ReadSize(item.value(), key);
      } else if (item.key() == "max_positions") {
        cfg.budget.max_positions = ReadSize(item.value(), key);
      } else if (item.key() == "max_elements") {
        cfg.budget.max_elements = ReadSize(item.value(), key);
      } else {
        Bad(key, "unknown key");
      }
    }
  }
  if (auto it = doc.find("local_search"); it != doc.end()) {
    if (!it->is_boolean()) Bad("local_search", "expected a boolean");
    cfg.maximizer.local_search = it->get<bool>();
  }
  return cfg;
}

bool TrialResult::ok() const {
  if (error || !feasible) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.passed; });
}

TrialResult run_trial(const BenchConfig& cfg, std::size_t index) {
  TrialResult t;
  t.index = index;
  t.seed = derive_seed(cfg.generator.seed, index);
  const double tol = cfg.tolerance;
  try {
    GeneratorConfig gen = cfg.generator;
    gen.seed = t.seed;
    const Instance inst = generate(gen);
    t.n_organic = inst.organic().size();
    t.n_sponsored = inst.sponsored().size();
    t.k = inst.num_positions();
    t.constraint = std::string(inst.organic_constraint().type_name());
    t.certified = inst.num_products() <= cfg.budget.max_products &&
                  inst.num_positions() <= cfg.budget.max_positions;

    ExactSolverOptions exact_options;
    exact_options.tolerance = tol;
    const ExactSolution exact = solve_exact(inst, exact_options);
    t.exact_revenue = exact.revenue;

    const CombinedReport rep = solve_constrained(inst, cfg.maximizer);
    const OrganicStep& step = *rep.both[1].organic;
    t.candidate_one = rep.both[0].revenue;
    t.candidate_two = rep.both[1].revenue;
    t.best = rep.best.revenue;
    t.beta_impl = rep.beta_used;
    t.w0_prime = step.w0_prime;
    t.organic_revenue = step.organic_revenue;
    t.feasible = check_feasible(inst, rep.best.placement).ok();

    // The unconstrained optimum bounds every constrained answer.
    AddCheck(t, "exact_dominates_constrained", exact.revenue, t.best, tol);
    if (!t.certified) return t;

    const OracleSolution p0 = oracle_p0(inst, cfg.budget);
    const DecomposedSolution p2 = oracle_p2(inst, cfg.budget);
    const OracleSolution p5 = oracle_p5(inst, step.w0_prime, cfg.budget);
    t.oracle_p0 = p0.revenue;
    t.oracle_p2 = p2.revenue;
    t.part_sponsored = p2.part_sponsored;
    t.part_organic = p2.part_organic;
    t.oracle_p5 = p5.revenue;
    t.beta_inst = p5.revenue > 0.0 ? step.organic_revenue / p5.revenue : 1.0;
    const double beta = p2.part_organic > 0.0 ? t.beta_inst : 1.0;
    t.combined_bound = beta / (beta + 1.0);
    t.combined_ratio = p2.revenue > 0.0 ? t.best / p2.revenue : 1.0;

    AddCheck(t, "exact_equals_oracle_p0", -std::abs(exact.revenue - p0.revenue), 0.0, tol);
    AddCheck(t, "candidate_I_covers_sponsored_part", t.candidate_one, p2.part_sponsored, tol);
    AddCheck(t, "organic_step_beta_impl", step.organic_revenue, t.beta_impl * p5.revenue, tol);
    AddCheck(t, "candidate_II_covers_organic_part", t.candidate_two, t.beta_inst * p2.part_organic, tol);
    AddCheck(t, "combined_ratio_bound", t.best, t.combined_bound * p2.revenue, tol);
    AddCheck(t, "oracle_p2_dominates", p2.revenue, t.best, tol);
  } catch (const Error& e) {
    t.error = e.code();
    t.error_message = e.what();
  }
  return t;
}

Quantiles quantiles(std::vector<double> values) {
  Quantiles q;
  if (values.empty()) return q;
  std::sort(values.begin(), values.end());
  auto at = [&](double p) {
    const double pos = p * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
  };
  q.min = values.front();
  q.p10 = at(0.1);
  q.p50 = at(0.5);
  q.p90 = at(0.9);
  q.max = values.back();
  double sum = 0.0;
  for (double v : values) sum += v;
  q.mean = sum / static_cast<double>(values.size());
  return q;
}

BenchReport run_bench(const BenchConfig& cfg, std::size_t trials,
                      std::size_t jobs) {
  validate_config(cfg.generator);
  BenchReport report;
  report.config = cfg;
  report.trials = trials;
  report.results.resize(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      report.results[i] = run_trial(cfg, i);
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(trials, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

Json bench_report_to_json(const BenchReport& report) {
  std::vector<double> ratios;
  std::vector<double> betas;
  std::vector<double> margins;
  std::size_t certified = 0;
  std::size_t errors = 0;
  std::size_t failed = 0;
  double max_exact_gap = 0.0;
  Json results = Json::array();
  for (const auto& t : report.results) {
    results.push_back(TrialJson(t));
    if (t.error) {
      ++errors;
      continue;
    }
    if (!t.ok()) ++failed;
    if (!t.certified) continue;
    ++certified;
    ratios.push_back(t.combined_ratio);
    betas.push_back(t.beta_inst);
    margins.push_back(t.combined_ratio - t.combined_bound);
    max_exact_gap = std::max(max_exact_gap, std::abs(t.exact_revenue - t.oracle_p0));
  }
  const BenchConfig& c = report.config;
  Json summary = {{"trials", report.trials},
                  {"certified", certified},
                  {"uncertified", report.trials - certified - errors},
                  {"errors", errors},
                  {"failed", failed},
                  {"all_passed", failed == 0 && errors == 0},
                  {"max_exact_gap", max_exact_gap},
                  {"combined_ratio", QuantilesJson(quantiles(ratios))},
                  {"beta_inst", QuantilesJson(quantiles(betas))},
                  {"combined_margin", QuantilesJson(quantiles(margins))}};
  return {{"generator", generator_config_to_json(c.generator)},
          {"oracle_budget", {{"max_products", c.budget.max_products},
                             {"max_positions", c.budget.max_positions},
                             {"max_elements", c.budget.max_elements}}},
          {"local_search", c.maximizer.local_search},
          {"tolerance", c.tolerance},
          {"summary", summary},
          {"results", results}};
}

int bench_exit_code(const BenchReport& report) {
  bool failed = false;
  for (const auto& t : report.results) {
    if (t.error) return 3;
    if (!t.ok()) failed = true;
  }
  return failed ? 1 : 0;
}

}  // namespace assortment
