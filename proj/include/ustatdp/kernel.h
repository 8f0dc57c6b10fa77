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

#ifndef USTATDP_KERNEL_H_
#define USTATDP_KERNEL_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>

namespace ustatdp {

// sup h - inf h <= range.
struct Bounded {
  double range = 0;
};

// h(X_S) - theta is sub-Gaussian with variance proxy tau.
struct SubGaussian {
  double tau = 0;
};

using Tail = std::variant<Bounded, SubGaussian>;

// A symmetric function of k data points.
class Kernel {
 public:
  using Fn = std::function<double(std::span<const double>)>;

  Kernel(int degree, Fn fn, Tail tail, std::string name = "custom")
      : degree_(degree),
        fn_(std::move(fn)),
        tail_(tail),
        name_(std::move(name)) {}

  int degree() const { return degree_; }
  const Tail& tail() const { return tail_; }
  const std::string& name() const { return name_; }

  // Additive range if the kernel is bounded.
  std::optional<double> range() const;
  // Variance proxy if the kernel is sub-Gaussian.
  std::optional<double> tau() const;

  double operator()(std::span<const double> x) const { return fn_(x); }

 private:
  int degree_;
  Fn fn_;
  Tail tail_;
  std::string name_;
};

namespace kernels {

Kernel Constant(int degree, double value);
// h(x) = x with sub-Gaussian proxy tau.
Kernel Identity(double tau);
// h(x, y) = (x + y) / 2. For N(mu, s^2) data tau = s^2 / 2.
Kernel PairMean(double tau);
// h = 1 if all arguments are equal. Bounded with range 1.
Kernel Equality(int degree);
// Collision indicator 1(x = y), the degree 2 equality kernel.
Kernel Collision();
// min(max(h, lo), hi). The result is bounded with range hi - lo.
Kernel Clipped(const Kernel& h, double lo, double hi);

}  // namespace kernels
}  // namespace ustatdp

#endif  // USTATDP_KERNEL_H_
