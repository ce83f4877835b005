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

#ifndef FAIRSYNTH_KERNELS_HPP_
#define FAIRSYNTH_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "fairsynth/schema.hpp"

namespace fairsynth::kernels {

// Hot inner loops of the synthesizers and the classifier. Each kernel has an
// OpenMP version (the default) and a *_serial reference; the two are
// bit-identical because every floating-point reduction uses the fixed block
// order from parallel.hpp. Tests assert the equivalence, and the benchmark
// target compares their throughput.

// Membership test for one marginal cell against a flattened domain index.
struct CellMask {
  struct Term {
    std::uint64_t stride;
    std::uint32_t cardinality;
    std::uint32_t code;
  };
  std::vector<Term> terms;

  bool contains(std::uint64_t index) const {
    for (const Term& t : terms) {
      if ((index / t.stride) % t.cardinality != t.code) return false;
    }
    return true;
  }
};

CellMask make_cell_mask(const Schema& schema,
                        std::span<const std::size_t> columns,
                        std::span<const std::uint32_t> cell);

// Sum of weights over domain cells matching the mask.
double masked_sum(std::span<const double> weights, const CellMask& mask);
double masked_sum_serial(std::span<const double> weights,
                         const CellMask& mask);

// Multiply matching cells by factor, then return the new total weight.
double scale_members(std::span<double> weights, const CellMask& mask,
                     double factor);
double scale_members_serial(std::span<double> weights, const CellMask& mask,
                            double factor);

// weights *= s
void scale_all(std::span<double> weights, double s);
void scale_all_serial(std::span<double> weights, double s);

// Contingency counts over the given columns (row-major over the sub-domain,
// last column fastest). Integer accumulation, so thread order is immaterial.
std::vector<double> count_marginal(const Dataset& data,
                                   std::span<const std::size_t> columns);
std::vector<double> count_marginal_serial(const Dataset& data,
                                          std::span<const std::size_t> columns);

// L2-regularized logistic regression objective and gradient on a dense
// feature matrix (row-major, n x d), with an unpenalized intercept appended
// as parameter d. Returns the objective; grad must have length d + 1.
double logreg_objective_gradient(std::span<const double> x, std::size_t n,
                                 std::size_t d, std::span<const double> y,
                                 std::span<const double> params, double lambda,
                                 std::span<double> grad);
double logreg_objective_gradient_serial(std::span<const double> x,
                                        std::size_t n, std::size_t d,
                                        std::span<const double> y,
                                        std::span<const double> params,
                                        double lambda, std::span<double> grad);

}  // namespace fairsynth::kernels

#endif  // FAIRSYNTH_KERNELS_HPP_
