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

#ifndef USTATDP_SENSITIVITY_H_
#define USTATDP_SENSITIVITY_H_

#include <functional>
#include <span>

#include "ustatdp/dataset.h"

namespace ustatdp {

using DatasetFunction = std::function<double(const Dataset&)>;

// max over positions i and letters a of |f(d) - f(d with d_i = a)|.
double BruteForceLocalSensitivity(const DatasetFunction& f, const Dataset& d,
                                  std::span<const double> alphabet);

// max of the local sensitivity over all |alphabet|^n datasets of size n.
double BruteForceGlobalSensitivity(const DatasetFunction& f, int n,
                                   std::span<const double> alphabet);

// Calls fn(const Dataset&) for every dataset of size n over the alphabet,
// in odometer order with position 0 varying fastest.
void ForEachDataset(int n, std::span<const double> alphabet,
                    const std::function<void(const Dataset&)>& fn);

}  // namespace ustatdp

#endif  // USTATDP_SENSITIVITY_H_
