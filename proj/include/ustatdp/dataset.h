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

#ifndef USTATDP_DATASET_H_
#define USTATDP_DATASET_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace ustatdp {

// n data values. Categories and node ids are stored as whole numbers.
struct Dataset {
  std::vector<double> points;

  size_t size() const { return points.size(); }
  double operator[](size_t i) const { return points[i]; }
  // Points begin..end-1 as a new dataset.
  Dataset Slice(size_t begin, size_t end) const;
};

// Newline-delimited reals. Blank lines are skipped.
absl::StatusOr<Dataset> ReadDataset(const std::string& path);
// Newline-delimited non-negative integers.
absl::StatusOr<Dataset> ReadCategorical(const std::string& path);
absl::Status WriteDataset(const Dataset& d, const std::string& path);

}  // namespace ustatdp

#endif  // USTATDP_DATASET_H_
