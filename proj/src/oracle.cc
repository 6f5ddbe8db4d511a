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

#include "restarts/oracle.h"

#include <algorithm>
#include <map>

namespace restarts {
namespace {

class Search {
 public:
  Search(const GenhazeInstance& instance, int max_len, std::int64_t budget)
      : instance_(instance), max_len_(max_len), budget_(budget) {}

  OracleResult Run() {
    const ScaledRational zero(0, instance_.scale());
    path_totals_.push_back({zero, zero});
    Visit();
    result_.nodes_visited = nodes_;
    return result_;
  }

 private:
  void Visit() {
    if (++nodes_ > budget_) {
      throw OracleBudgetExceeded("oracle exceeded its node budget of " +
                                 std::to_string(budget_));
    }
    const auto [h1, h2] = path_totals_.back();  // copy: the vector grows below
    const int depth = static_cast<int>(prefix_.size());
    if (h1 > instance_.theta().first && h2 > instance_.theta().second) {
      const ScaledRational sum = h1 + h2;
      if (result_.status != OracleStatus::kOptimal || sum < result_.total_sum) {
        result_.status = OracleStatus::kOptimal;
        result_.total_sum = sum;
        result_.best_prefix = prefix_;
      }
    }
    if (depth >= max_len_) return;
    // Everything below these totals only depends on the totals and the
    // remaining depth, so a state already expanded at depth <= this one has
    // nothing new to offer.
    auto [seen, fresh] = expanded_.try_emplace({h1, h2}, depth);
    if (!fresh) {
      if (seen->second <= depth) return;
      seen->second = depth;
    }

    const bool max_sw = instance_.max_sw();
    const ScaledRational zero(0);
    for (const PairCost& cost : instance_.costs()) {
      if (!(h1 > cost.threshold.first && h2 > cost.threshold.second)) continue;
      PerPlayer<ScaledRational> next = {h1 + cost.hazing.first,
                                        h2 + cost.hazing.second};
      if (next.first + next.second > instance_.bound()) continue;
      if (max_sw) {
        if (next.first < zero || next.second < zero) continue;
        if (std::find(path_totals_.begin(), path_totals_.end(), next) !=
            path_totals_.end()) {
          continue;
        }
      }
      prefix_.push_back(cost.pair);
      path_totals_.push_back(next);
      Visit();
      path_totals_.pop_back();
      prefix_.pop_back();
    }
  }

  const GenhazeInstance& instance_;
  const int max_len_;
  const std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<ActionPair> prefix_;
  std::vector<PerPlayer<ScaledRational>> path_totals_;
  std::map<PerPlayer<ScaledRational>, int> expanded_;
  OracleResult result_;
};

}  // namespace

std::string OracleStatusName(OracleStatus status) {
  return status == OracleStatus::kOptimal ? "optimal" : "none_within_depth";
}

OracleResult BruteMinHazing(const GenhazeInstance& instance, int max_len,
                            std::int64_t node_budget) {
  if (max_len < 0) throw std::invalid_argument("max_len must be non-negative");
  return Search(instance, max_len, node_budget).Run();
}

std::optional<std::string> FindConstraintViolation(
    const GenhazeInstance& instance, const std::vector<ActionPair>& prefix) {
  ScaledRational h1(0), h2(0);
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    const ActionPair pair = prefix[k];
    if (pair.row < 0 || pair.row >= instance.num_rows() || pair.col < 0 ||
        pair.col >= instance.num_cols()) {
      return "round " + std::to_string(k) + " uses an unknown pair";
    }
    const PairCost& cost = instance.cost(pair);
    if (!(h1 > cost.threshold.first)) {
      return "round " + std::to_string(k) + ": row player's total " +
             h1.ToString() + " does not exceed threshold " +
             cost.threshold.first.ToString();
    }
    if (!(h2 > cost.threshold.second)) {
      return "round " + std::to_string(k) + ": column player's total " +
             h2.ToString() + " does not exceed threshold " +
             cost.threshold.second.ToString();
    }
    h1 += cost.hazing.first;
    h2 += cost.hazing.second;
  }
  if (!(h1 > instance.theta().first) || !(h2 > instance.theta().second)) {
    return "final totals (" + h1.ToString() + ", " + h2.ToString() +
           ") do not exceed the goal thresholds";
  }
  if (h1 + h2 > instance.bound()) {
    return "summed hazing " + (h1 + h2).ToString() + " exceeds the bound " +
           instance.bound().ToString();
  }
  return std::nullopt;
}

CrossCheckReport CrossCheck(const GenhazeInstance& instance, int max_len,
                            std::int64_t node_budget) {
  CrossCheckReport report;
  report.max_len = max_len;
  report.solver = SolveDp(instance);
  report.oracle = BruteMinHazing(instance, max_len, node_budget);
  const bool solver_ok = report.solver.status == SolveStatus::kOptimal;
  const bool oracle_ok = report.oracle.status == OracleStatus::kOptimal;
  report.depth_sufficient =
      solver_ok && static_cast<int>(report.solver.prefix.size()) <= max_len;

  auto fail = [&](std::string message) {
    if (report.match) report.message = std::move(message);
    report.match = false;
  };
  if (solver_ok) {
    if (auto v = FindConstraintViolation(instance, report.solver.prefix)) {
      fail("solver prefix invalid: " + *v);
    }
  }
  if (oracle_ok) {
    if (auto v = FindConstraintViolation(instance, report.oracle.best_prefix)) {
      fail("oracle prefix invalid: " + *v);
    }
  }
  if (oracle_ok && !solver_ok) {
    fail("oracle found total " + report.oracle.total_sum.ToString() +
         " but the solver reported no solution within the bound");
  } else if (solver_ok && report.depth_sufficient) {
    if (!oracle_ok) {
      fail("oracle found nothing at depth " + std::to_string(max_len) +
           " although the solver's prefix has length " +
           std::to_string(report.solver.prefix.size()));
    } else if (report.oracle.total_sum != report.solver.total_sum) {
      fail("total mismatch: solver " + report.solver.total_sum.ToString() +
           ", oracle " + report.oracle.total_sum.ToString());
    }
  } else if (solver_ok && oracle_ok &&
             report.oracle.total_sum < report.solver.total_sum) {
    fail("oracle beat the solver: " + report.oracle.total_sum.ToString() +
         " < " + report.solver.total_sum.ToString());
  }
  if (report.match) {
    report.message = solver_ok && oracle_ok && report.depth_sufficient
                         ? "match at " + report.solver.total_sum.ToString()
                         : "no conflict";
  }
  return report;
}

}  // namespace restarts
