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

#ifndef FAIRSYNTH_UNDERSAMPLE_HPP_
#define FAIRSYNTH_UNDERSAMPLE_HPP_

#include <cstdint>

#include "fairsynth/schema.hpp"

namespace fairsynth {

// Multi-label undersampling: keep every row of the smallest (a, y) group and
// sample, without replacement, that many rows from each of the other three,
// so all four groups end up equal and the minority proportion becomes
// exactly 0.25. Output row order is a deterministic shuffle of the kept
// rows. Runs on non-private data before synthesis; refuses held-out test
// splits.
Dataset multilabel_undersample(const Dataset& data, std::uint64_t seed);

}  // namespace fairsynth

#endif  // FAIRSYNTH_UNDERSAMPLE_HPP_
