// Copyright 2026 The ustatdp Authors
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

#include "ustatdp/kernel.h"

#include <algorithm>

namespace ustatdp {

std::optional<double> Kernel::range() const {
  if (const auto* b = std::get_if<Bounded>(&tail_)) return b->range;
  return std::nullopt;
}

std::optional<double> Kernel::tau() const {
  if (const auto* s = std::get_if<SubGaussian>(&tail_)) return s->tau;
  return std::nullopt;
}

namespace kernels {

Kernel Constant(int degree, double value) {
  return Kernel(
      degree, [value](std::span<const double>) { return value; },
      Bounded{0.0}, "constant");
}

Kernel Identity(double tau) {
  return Kernel(
      1, [](std::span<const double> x) { return x[0]; }, SubGaussian{tau},
      "identity");
}

Kernel PairMean(double tau) {
  return Kernel(
      2, [](std::span<const double> x) { return 0.5 * (x[0] + x[1]); },
      SubGaussian{tau}, "pair-mean");
}

Kernel Equality(int degree) {
  return Kernel(
      degree,
      [](std::span<const double> x) {
        for (size_t i = 1; i < x.size(); ++i) {
          if (x[i] != x[0]) return 0.0;
        }
        return 1.0;
      },
      Bounded{1.0}, degree == 2 ? "collision" : "equality");
}

Kernel Collision() { return Equality(2); }

Kernel Clipped(const Kernel& h, double lo, double hi) {
  return Kernel(
      h.degree(),
      [h, lo, hi](std::span<const double> x) {
        return std::clamp(h(x), lo, hi);
      },
      Bounded{hi - lo}, h.name() + "-clipped");
}

}  // namespace kernels
}  // namespace ustatdp
