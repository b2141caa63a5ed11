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

// Seeded random instances. The same config always yields the same instance,
// independent of platform: the engine is mt19937_64 and all mappings from its
// output to doubles and integers are defined here rather than by the
// standard library distributions.

#ifndef ASSORTMENT_GENERATOR_H_
#define ASSORTMENT_GENERATOR_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "assortment/model.h"

namespace assortment {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Uniform on the closed range [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Well-mixed seed for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct RealRange {
  double lo = 0.0;
  double hi = 0.0;
};

struct ConstraintRecipe {
  // none | knapsack | partition | cardinality | mixed (knapsack or
  // partition, chosen per instance).
  std::string type = "none";
  RealRange cost_range{1.0, 3.0};
  double capacity_fraction = 0.5;  // of the total organic cost
  int groups = 2;
  int cap_max = 2;
  int max = 2;  // cardinality bound
};

struct GeneratorConfig {
  std::uint64_t seed = 1;
  IntRange n_organic{3, 3};
  IntRange n_sponsored{1, 1};
  IntRange k{3, 3};
  RealRange revenue_range{1.0, 10.0};
  RealRange weight_range{0.1, 2.0};
  double position_decay = 0.8;  // w(i,t) = base_i * decay^(t-1)
  double noise = 0.0;           // multiplicative jitter in [1-noise, 1+noise]
  double w0 = 1.0;
  std::string reserved = "random";  // top | bottom | random
  std::string valid = "mixed";      // full | singleton | random | mixed
  ConstraintRecipe constraint;
};

// Throws kConfigError describing the first bad field.
void validate_config(const GeneratorConfig& cfg);

// Integer fields accept either a number or a [lo, hi] pair. Keys listed in
// `extra_keys` are ignored; any other unknown key is a kConfigError.
GeneratorConfig generator_config_from_json(
    const nlohmann::json& doc,
    std::initializer_list<std::string_view> extra_keys = {});
GeneratorConfig parse_generator_config(std::string_view text);
nlohmann::ordered_json generator_config_to_json(const GeneratorConfig& cfg);

Instance generate(const GeneratorConfig& cfg);

}  // namespace assortment

#endif  // ASSORTMENT_GENERATOR_H_
