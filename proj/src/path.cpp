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

#include "hmpp/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hmpp {

TimeGrid::TimeGrid(std::vector<double> boundaries)
    : boundaries_(std::move(boundaries)) {
  if (boundaries_.size() < 2) {
    throw std::invalid_argument("TimeGrid needs at least one cell");
  }
  if (boundaries_.front() != 0.0) {
    throw std::invalid_argument("TimeGrid must start at 0");
  }
  for (std::size_t i = 1; i < boundaries_.size(); ++i) {
    if (!(boundaries_[i] > boundaries_[i - 1]) ||
        !std::isfinite(boundaries_[i])) {
      throw std::invalid_argument("TimeGrid boundaries must strictly increase");
    }
  }
}

TimeGrid TimeGrid::unit(double horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("TimeGrid::unit: horizon must be positive");
  }
  std::vector<double> b;
  b.push_back(0.0);
  for (double t = 1.0; t < horizon; t += 1.0) b.push_back(t);
  if (b.back() < horizon) b.push_back(horizon);
  return TimeGrid(std::move(b));
}

ArrX TimeGrid::widths() const {
  ArrX w(cells());
  for (std::size_t k = 0; k < cells(); ++k) w[k] = width(k);
  return w;
}

std::size_t TimeGrid::cell_of(double t) const {
  if (t < 0.0 || t > end()) {
    throw std::out_of_range("cell_of: time outside grid");
  }
  if (t <= boundaries_[1]) return 0;
  // First boundary >= t; t belongs to the cell ending there.
  const auto it = std::lower_bound(boundaries_.begin(), boundaries_.end(), t);
  return static_cast<std::size_t>(it - boundaries_.begin()) - 1;
}

PiecewiseConstantPath::PiecewiseConstantPath(TimeGrid g, ArrX v)
    : grid(std::move(g)), values(std::move(v)) {
  if (static_cast<std::size_t>(values.size()) != grid.cells()) {
    throw std::invalid_argument("path values do not match grid cells");
  }
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (!(values[k] > 0.0) || !std::isfinite(values[k])) {
      throw std::domain_error("path values must be positive and finite");
    }
  }
}

double path_integral(const PiecewiseConstantPath& p, double a, double b) {
  if (a > b) throw std::invalid_argument("path_integral: a > b");
  if (a < 0.0 || b > p.grid.end()) {
    throw std::invalid_argument("path_integral: interval outside grid");
  }
  const auto& bounds = p.grid.boundaries();
  double total = 0.0;
  for (std::size_t k = 0; k < p.grid.cells(); ++k) {
    const double lo = std::max(a, bounds[k]);
    const double hi = std::min(b, bounds[k + 1]);
    if (hi > lo) total += p.values[k] * (hi - lo);
  }
  return total;
}

ArrX cell_event_counts(const EventSequence& s, const TimeGrid& grid) {
  ArrX counts = ArrX::Zero(grid.cells());
  for (const double t : s.event_times) {
    if (t > grid.end()) {
      throw std::out_of_range("event time outside grid for sequence '" +
                              s.id + "'");
    }
    counts[grid.cell_of(t)] += 1.0;
  }
  return counts;
}

PiecewiseConstantPath true_rate_path(const EventSequence& s,
                                     const TimeGrid& grid) {
  return {grid, ArrX::Constant(grid.cells(), s.generating_rate())};
}

}  // namespace hmpp
