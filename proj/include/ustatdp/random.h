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

#ifndef USTATDP_RANDOM_H_
#define USTATDP_RANDOM_H_

#include <cstdint>
#include <random>

namespace ustatdp {

// SplitMix64 finalizer. Used to derive independent stream seeds.
uint64_t SplitMix64(uint64_t x);

// Seed for the stream identified by (master, a, b). Trials of a Monte Carlo
// cell use (master, cell, trial); chunks of a median-of-means run use
// (seed, chunk, 0).
uint64_t DeriveSeed(uint64_t master, uint64_t a, uint64_t b = 0);

// Portable random source. The standard distributions are implementation
// defined, so every variate is built directly from mt19937_64 output and the
// same seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }
  // Uniform on the open interval (0, 1).
  double Uniform();
  // Uniform integer in [0, bound). bound must be positive.
  uint64_t UniformInt(uint64_t bound);
  double Normal();
  // Laplace with scale b via the inverse CDF.
  double Laplace(double b);
  double Cauchy();

 private:
  std::mt19937_64 engine_;
};

}  // namespace ustatdp

#endif  // USTATDP_RANDOM_H_
