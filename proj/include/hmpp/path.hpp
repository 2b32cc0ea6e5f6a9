// Copyright 2026 The hmpp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "hmpp/event_stream.hpp"
#include "hmpp/types.hpp"

namespace hmpp {

/// Strictly increasing cell boundaries 0 = b_0 < b_1 < ... < b_K.
/// Cell k covers the half-open interval (b_k, b_{k+1}], so every event time
/// in (0, b_K] belongs to exactly one cell.
class TimeGrid {
 public:
  explicit TimeGrid(std::vector<double> boundaries);

  /// Unit-length cells spanning [0, horizon]; a shorter final cell absorbs
  /// any fractional remainder.
  static TimeGrid unit(double horizon);

  std::size_t cells() const { return boundaries_.size() - 1; }
  double start() const { return boundaries_.front(); }
  double end() const { return boundaries_.back(); }
  double width(std::size_t k) const {
    return boundaries_[k + 1] - boundaries_[k];
  }
  ArrX widths() const;
  const std::vector<double>& boundaries() const { return boundaries_; }

  /// Index of the cell containing t under the (b_k, b_{k+1}] convention;
  /// t = 0 maps to cell 0. Throws if t lies outside [0, end()].
  std::size_t cell_of(double t) const;

  bool operator==(const TimeGrid& other) const {
    return boundaries_ == other.boundaries_;
  }

 private:
  std::vector<double> boundaries_;
};

/// A rate path that is constant on each grid cell. Values are rates per
/// time unit and must be positive and finite.
struct PiecewiseConstantPath {
  TimeGrid grid;
  ArrX values;

  PiecewiseConstantPath(TimeGrid g, ArrX v);

  double value_at(double t) const { return values[grid.cell_of(t)]; }
};

/// Integral of the path over [a, b]; equals the cumulative-hazard increment
/// Lambda(b) - Lambda(a). Requires 0 <= a <= b <= grid end.
double path_integral(const PiecewiseConstantPath& p, double a, double b);

/// Cumulative hazard Lambda(t) = integral of the path over [0, t].
inline double cumulative_hazard(const PiecewiseConstantPath& p, double t) {
  return path_integral(p, 0.0, t);
}

/// Per-cell event counts N_k of a sequence on a grid; the counts sum to the
/// sequence's total event count. Throws if an event lies outside the grid.
ArrX cell_event_counts(const EventSequence& s, const TimeGrid& grid);

/// A constant path at the sequence's generating rate, on the given grid.
PiecewiseConstantPath true_rate_path(const EventSequence& s,
                                     const TimeGrid& grid);

}  // namespace hmpp
