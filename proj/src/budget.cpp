// Copyright 2026 The fairsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairsynth/budget.hpp"

#include <vector>

#include "fairsynth/parallel.hpp"

namespace fairsynth {

namespace {

// Slack for the componentwise spent <= total check. Splitting a budget into
// 2T equal parts and re-adding them leaves ~1e-14 of float dust; genuine
// overspends in the spec's examples are 1e-7 or larger.
constexpr double kSlack = 1e-9;

}  // namespace

Budget BudgetLedger::spent() const {
  std::vector<double> eps, del;
  eps.reserve(entries_.size());
  del.reserve(entries_.size());
  for (const LedgerEntry& e : entries_) {
    eps.push_back(e.amount.epsilon);
    del.push_back(e.amount.delta);
  }
  Budget out;
  out.epsilon = par::kahan_sum(eps.data(), eps.size());
  out.delta = par::kahan_sum(del.data(), del.size());
  return out;
}

Budget BudgetLedger::remaining() const {
  const Budget used = spent();
  Budget out;
  out.epsilon = total_.epsilon - used.epsilon;
  out.delta = total_.delta - used.delta;
  if (out.epsilon < 0.0) out.epsilon = 0.0;
  if (out.delta < 0.0) out.delta = 0.0;
  return out;
}

void BudgetLedger::spend(std::string label, Budget amount) {
  const Budget used = spent();
  const double eps_after = used.epsilon + amount.epsilon;
  const double del_after = used.delta + amount.delta;
  if (eps_after > total_.epsilon + kSlack ||
      del_after > total_.delta + kSlack) {
    const Budget left = remaining();
    throw OverspendError(detail::concat(
        "budget overspend at '", label, "': requested (", amount.epsilon, ", ",
        amount.delta, "), remaining (", left.epsilon, ", ", left.delta,
        ") of total (", total_.epsilon, ", ", total_.delta, ")"));
  }
  entries_.push_back(LedgerEntry{std::move(label), amount});
}

}  // namespace fairsynth
