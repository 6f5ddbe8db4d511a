// Copyright 2026 The Restarts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESTARTS_IO_H_
#define RESTARTS_IO_H_

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "restarts/existence.h"
#include "restarts/game.h"
#include "restarts/genhaze.h"
#include "restarts/oracle.h"
#include "restarts/reductions.h"
#include "restarts/solver.h"
#include "restarts/stability.h"

// JSON encodings of every value that crosses a file or process boundary.
//
//   game      {"actions1": [..], "actions2": [..],
//              "payoff1": [[..]..], "payoff2": [[..]..]}   row-major
//   goal      [[row, col], ...]
//   plan      {"goal": <goal>, "prefix": [{"count": n, "pair": [row, col]}]}
//   instance  {"actions1", "actions2", "bound": N, "max_sw": bool,
//              "scale": r, "theta": [N1, N2],
//              "costs": [{"pair": [row, col], "h": [N1, N2], "t": [N1, N2]}]}
//             every N is a numerator over "scale"
//   ussp      {"target": B, "values": [b1, ..]}
//
// Keys are emitted sorted; Dump() output is byte-stable, so a parsed file
// re-emits identically.

namespace restarts {

using Json = nlohmann::json;

// Malformed input of any kind (syntax, schema, domain).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json ToJson(const Game& game);
Json ToJson(const GoalSequence& goal);
Json ToJson(const SequencePlan& plan);
Json ToJson(const GenhazeInstance& instance);
Json ToJson(const UsspInstance& ussp);

Game GameFromJson(const Json& json);
GoalSequence GoalFromJson(const Json& json);
SequencePlan PlanFromJson(const Json& json);
GenhazeInstance InstanceFromJson(const Json& json);
UsspInstance UsspFromJson(const Json& json);

// Reports. Labels come from the game or instance when given.
Json ToJson(const Rational& value);
Json ToJson(const StabilityVerdict& verdict, const Game& game,
            bool with_diagnostics = false);
Json ToJson(const FeasibilityVerdict& verdict, const Game& game);
Json ToJson(const SolveResult& result, const GenhazeInstance& instance);
Json ToJson(const OracleResult& result, const GenhazeInstance& instance);
Json ToJson(const CrossCheckReport& report, const GenhazeInstance& instance);

// Canonical text: two-space indent, sorted keys, trailing newline.
std::string Dump(const Json& json);

Json ParseJson(const std::string& text);
Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace restarts

#endif  // RESTARTS_IO_H_
