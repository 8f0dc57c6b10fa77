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

#include "ustatdp/dataset.h"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>

#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"

namespace ustatdp {

Dataset Dataset::Slice(size_t begin, size_t end) const {
  return Dataset{std::vector<double>(points.begin() + begin,
                                     points.begin() + end)};
}

namespace {

absl::StatusOr<Dataset> ReadLines(const std::string& path, bool categorical) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  Dataset d;
  std::string line;
  int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s(absl::StripAsciiWhitespace(line));
    if (s.empty()) continue;
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (errno != 0 || end != s.c_str() + s.size() || !std::isfinite(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ":", lineno, ": not a number: ", s));
    }
    if (categorical && (v < 0 || v != std::floor(v))) {
      return absl::InvalidArgumentError(absl::StrCat(
          path, ":", lineno, ": expected a non-negative integer: ", s));
    }
    d.points.push_back(v);
  }
  return d;
}

}  // namespace

absl::StatusOr<Dataset> ReadDataset(const std::string& path) {
  return ReadLines(path, false);
}

absl::StatusOr<Dataset> ReadCategorical(const std::string& path) {
  return ReadLines(path, true);
}

absl::Status WriteDataset(const Dataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  out << std::setprecision(17);
  for (double v : d.points) out << v << '\n';
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("write failed: ", path));
}

}  // namespace ustatdp
