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

#include "fairsynth/undersample.hpp"

#include <array>
#include <vector>

#include "fairsynth/rng.hpp"

namespace fairsynth {

Dataset multilabel_undersample(const Dataset& data, std::uint64_t seed) {
  if (data.lineage_contains("test-split")) {
    throw Error("multilabel_undersample: refusing to balance a test split");
  }
  const std::size_t a_col = data.schema().protected_attr();
  const std::size_t y_col = data.schema().label();

  std::array<std::vector<std::size_t>, 4> members;
  for (std::size_t i = 0; i < data.row_count(); ++i) {
    members[data.at(i, a_col) * 2 + data.at(i, y_col)].push_back(i);
  }
  std::size_t min_count = data.row_count();
  for (const auto& m : members) min_count = std::min(min_count, m.size());
  if (min_count == 0) {
    for (std::size_t g = 0; g < 4; ++g) {
      if (members[g].empty()) {
        throw Error(detail::concat(
            "multilabel_undersample: group ",
            GroupKey{static_cast<int>(g / 2), static_cast<int>(g % 2)}
                .to_string(),
            " is empty; balancing impossible"));
      }
    }
  }

  Randomness rng(mix_seed(seed, {0x756e646572ull}));  // "under"
  std::vector<std::size_t> kept;
  kept.reserve(4 * min_count);
  for (auto& group : members) {
    // Partial Fisher-Yates: the first min_count entries are a uniform
    // without-replacement sample. The minority group passes through whole.
    for (std::size_t i = 0; i < min_count; ++i) {
      const std::size_t j = i + rng.uniform_index(group.size() - i);
      std::swap(group[i], group[j]);
      kept.push_back(group[i]);
    }
  }
  for (std::size_t i = kept.size(); i-- > 1;) {
    std::swap(kept[i], kept[rng.uniform_index(i + 1)]);
  }

  const std::size_t w = data.schema().column_count();
  std::vector<std::uint32_t> flat;
  flat.reserve(kept.size() * w);
  for (std::size_t i : kept) {
    const auto row = data.row(i);
    flat.insert(flat.end(), row.begin(), row.end());
  }
  std::vector<std::string> lineage = data.lineage();
  lineage.push_back("undersampled");
  return Dataset(data.schema(), std::move(flat), std::move(lineage));
}

}  // namespace fairsynth
