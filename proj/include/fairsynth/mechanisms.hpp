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

#ifndef FAIRSYNTH_MECHANISMS_HPP_
#define FAIRSYNTH_MECHANISMS_HPP_

#include <cstddef>
#include <span>

#include "fairsynth/budget.hpp"
#include "fairsynth/rng.hpp"

namespace fairsynth {

// Sample from Laplace(0, b) with b = sensitivity / epsilon.
double laplace_noise(double sensitivity, double epsilon, Randomness& rng);

// Classic analytic Gaussian calibration:
//   sigma = sensitivity * sqrt(2 ln(1.25/delta)) / epsilon.
// Requires delta > 0.
double gaussian_sigma(double sensitivity, const Budget& budget);

// Gaussian(0, sigma^2) sample.
double gaussian_noise(double sigma, Randomness& rng);

// Exponential mechanism: returns index i with probability proportional to
// exp(epsilon * score_i / (2 * sensitivity)). Scores are shifted by their
// maximum before exponentiation, so huge scores cannot overflow.
std::size_t exponential_select(std::span<const double> scores,
                               double sensitivity, double epsilon,
                               Randomness& rng);

// Noise-disabled counterpart used by the test-mode path: first maximal index.
std::size_t argmax_select(std::span<const double> scores);

}  // namespace fairsynth

#endif  // FAIRSYNTH_MECHANISMS_HPP_
