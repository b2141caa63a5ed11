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

#ifndef ASSORTMENT_CLI_H_
#define ASSORTMENT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "assortment/error.h"

namespace assortment {

// Exit status for an error: 1 infeasible input or violated check, 2 parse
// or configuration problem, 3 budget or convergence failure.
int exit_code_for(ErrorCode code);

// Entry point of the `assortment` tool. `args` excludes the program name.
// Results go to `out` as JSON, diagnostics to `err`. Failures also print an
// {"error": {"code", "message"}} object to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace assortment

#endif  // ASSORTMENT_CLI_H_
