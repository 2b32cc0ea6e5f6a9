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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hmpp/event_stream.hpp"
#include "hmpp/types.hpp"

namespace hmpp {

enum class SimMode { singly, doubly };

/// Law of the base-rate draw lambda* = 10^V on [10^lo, 10^hi]:
/// log_uniform draws V uniformly; log_truncated_exponential gives V a
/// density proportional to 10^-V (mass concentrated at low rates).
enum class BaseRateLaw { log_uniform, log_truncated_exponential };

struct SimConfig {
  SimMode mode = SimMode::singly;
  std::size_t samples = 1;
  double horizon = 10.0;
  BaseRateLaw law = BaseRateLaw::log_uniform;
  std::array<double, 2> log10_rate_range{-2.0, 2.0};
  std::array<double, 2> frailty_log10_range{-2.0, 0.0};
  /// When > 0, the exposed "rate" covariate is the true rate corrupted by
  /// N(0, sd^2) noise in log10 space; the clean value is kept under
  /// "rate_true" so oracle weighting and calibration stay exact.
  double covariate_noise_log10 = 0.0;
  std::uint64_t seed = 0;
  int threads = 1;

  void validate() const;
  nlohmann::json to_json() const;
};

std::string to_string(SimMode m);
std::string to_string(BaseRateLaw l);
SimMode sim_mode_from_string(const std::string& s);
BaseRateLaw base_rate_law_from_string(const std::string& s);

/// Draw the per-sample base rate lambda* = 10^V; always within
/// [10^lo, 10^hi].
double sample_base_rate(RngStream& rng, const SimConfig& cfg);

/// Draw the log10 frailty u ~ Uniform(frailty range). Only meaningful in
/// doubly mode; throws std::logic_error otherwise.
double sample_frailty(RngStream& rng, const SimConfig& cfg);

/// Homogeneous Poisson event times on (0, horizon] via cumulated
/// exponential gaps. rate == 0 yields an empty sequence.
std::vector<double> simulate_sequence(RngStream& rng, double rate,
                                      double horizon);

/// Generate the full dataset. Each sequence gets its own RNG substream
/// derived from (seed, index), so the result is independent of generation
/// order and thread count. The exposed "rate" covariate is always the base
/// rate lambda* (possibly noised); the frailty multiplier never leaks into
/// covariates.
Dataset simulate_dataset(const SimConfig& cfg);

}  // namespace hmpp
