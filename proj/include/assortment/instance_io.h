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

// JSON reading and writing for instances, placements and solver reports.
// The schemas are described in docs/json_schemas.md.

#ifndef ASSORTMENT_INSTANCE_IO_H_
#define ASSORTMENT_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include <json.hpp>

#include "assortment/constrained_solver.h"
#include "assortment/error.h"
#include "assortment/exact_solver.h"
#include "assortment/model.h"
#include "assortment/oracle.h"

namespace assortment {

using Json = nlohmann::ordered_json;

// Throws kParseError for malformed JSON or wrongly typed keys and
// kValidationError for model invariant violations. Messages start with the
// offending key, e.g. "valid_positions.s1: ...".
Instance parse_instance(std::string_view text);
Instance instance_from_json(const nlohmann::json& doc);

Json instance_to_json(const Instance& inst);
std::string serialize_instance(const Instance& inst);

// {"placement": [{"slot": 1, "product": "s1"}, ...]}. Product names must
// exist in `inst`; slot numbers are taken as given so that check_feasible
// can report unknown slots.
Placement parse_placement(const Instance& inst, std::string_view text);
Json placement_to_json(const Instance& inst, const Placement& pl);

Json exact_report_to_json(const Instance& inst, const ExactSolution& sol);
Json combined_report_to_json(const Instance& inst, const CombinedReport& rep);
Json oracle_p0_to_json(const Instance& inst, const OracleSolution& sol);
Json oracle_p2_to_json(const Instance& inst, const DecomposedSolution& sol);
Json verdict_to_json(const Instance& inst, const Placement& pl,
                     const FeasibilityVerdict& verdict);
Json error_to_json(ErrorCode code, std::string_view message);

// Reads a whole file; throws kParseError naming the path on failure.
std::string read_file(const std::string& path);

}  // namespace assortment

#endif  // ASSORTMENT_INSTANCE_IO_H_
