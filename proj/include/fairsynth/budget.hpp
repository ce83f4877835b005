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

#ifndef FAIRSYNTH_BUDGET_HPP_
#define FAIRSYNTH_BUDGET_HPP_

#include <string>
#include <vector>

#include "fairsynth/error.hpp"

namespace fairsynth {

// (epsilon, delta) privacy budget. (0, 0) as a ledger total means no spend
// is allowed.
struct Budget {
  double epsilon = 0.0;
  double delta = 0.0;

  Budget() = default;
  Budget(double eps, double del) : epsilon(eps), delta(del) {
    if (epsilon < 0.0) throw Error("budget: epsilon must be >= 0");
    if (delta < 0.0 || delta >= 1.0) {
      throw Error("budget: delta must lie in [0, 1)");
    }
  }
};

struct LedgerEntry {
  std::string label;
  Budget amount;
};

// Sequential-composition accountant: epsilons and deltas of successive spends
// add, and the running total may never exceed the configured budget. This is
// the conservative textbook rule; no advanced composition is applied.
class BudgetLedger {
 public:
  explicit BudgetLedger(Budget total) : total_(total) {}

  // Appends a spend. Throws OverspendError (naming the label, the requested
  // amount and what is left) if the spend would exceed the total.
  void spend(std::string label, Budget amount);

  Budget total() const { return total_; }
  Budget spent() const;  // compensated sum over entries
  Budget remaining() const;
  const std::vector<LedgerEntry>& entries() const { return entries_; }

 private:
  Budget total_;
  std::vector<LedgerEntry> entries_;
};

}  // namespace fairsynth

#endif  // FAIRSYNTH_BUDGET_HPP_
