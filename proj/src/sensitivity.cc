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

#include "ustatdp/sensitivity.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ustatdp {

double BruteForceLocalSensitivity(const DatasetFunction& f, const Dataset& d,
                                  std::span<const double> alphabet) {
  const double base = f(d);
  Dataset nb = d;
  double worst = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    for (double a : alphabet) {
      if (a == d[i]) continue;
      nb.points[i] = a;
      worst = std::max(worst, std::fabs(base - f(nb)));
    }
    nb.points[i] = d[i];
  }
  return worst;
}

void ForEachDataset(int n, std::span<const double> alphabet,
                    const std::function<void(const Dataset&)>& fn) {
  if (alphabet.empty()) return;
  std::vector<size_t> digit(n, 0);
  Dataset d{std::vector<double>(n, alphabet[0])};
  while (true) {
    fn(d);
    int pos = 0;
    while (pos < n && digit[pos] + 1 == alphabet.size()) {
      digit[pos] = 0;
      d.points[pos] = alphabet[0];
      ++pos;
    }
    if (pos == n) return;
    d.points[pos] = alphabet[++digit[pos]];
  }
}

double BruteForceGlobalSensitivity(const DatasetFunction& f, int n,
                                   std::span<const double> alphabet) {
  double worst = 0;
  ForEachDataset(n, alphabet, [&](const Dataset& d) {
    worst = std::max(worst, BruteForceLocalSensitivity(f, d, alphabet));
  });
  return worst;
}

}  // namespace ustatdp
