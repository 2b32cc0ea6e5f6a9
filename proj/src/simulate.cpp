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

#include "hmpp/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace hmpp {

void SimConfig::validate() const {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be > 0");
  if (!(log10_rate_range[0] <= log10_rate_range[1])) {
    throw std::invalid_argument("log10 rate range must have lo <= hi");
  }
  if (mode == SimMode::doubly &&
      !(frailty_log10_range[0] < frailty_log10_range[1])) {
    throw std::invalid_argument("frailty range must have lo < hi");
  }
  if (covariate_noise_log10 < 0.0) {
    throw std::invalid_argument("covariate noise sd must be >= 0");
  }
}

std::string to_string(SimMode m) {
  return m == SimMode::singly ? "singly" : "doubly";
}

std::string to_string(BaseRateLaw l) {
  return l == BaseRateLaw::log_uniform ? "log-uniform" : "log-trunc-exp";
}

SimMode sim_mode_from_string(const std::string& s) {
  if (s == "singly") return SimMode::singly;
  if (s == "doubly") return SimMode::doubly;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

BaseRateLaw base_rate_law_from_string(const std::string& s) {
  if (s == "log-uniform") return BaseRateLaw::log_uniform;
  if (s == "log-trunc-exp") return BaseRateLaw::log_truncated_exponential;
  throw std::invalid_argument("unknown law '" + s + "'");
}

nlohmann::json SimConfig::to_json() const {
  nlohmann::json j;
  j["mode"] = to_string(mode);
  j["samples"] = samples;
  j["horizon"] = horizon;
  j["law"] = to_string(law);
  j["log10_rate_range"] = log10_rate_range;
  j["frailty_log10_range"] = frailty_log10_range;
  j["covariate_noise_log10"] = covariate_noise_log10;
  j["seed"] = seed;
  return j;
}

double sample_base_rate(RngStream& rng, const SimConfig& cfg) {
  const double lo = cfg.log10_rate_range[0];
  const double hi = cfg.log10_rate_range[1];
  if (lo == hi) {
    rng.uniform01();  // keep the draw count law-independent
    return std::pow(10.0, lo);
  }
  double v = 0.0;
  if (cfg.law == BaseRateLaw::log_uniform) {
    v = rng.uniform(lo, hi);
  } else {
    // Inverse CDF of density proportional to 10^-V on [lo, hi].
    const double p = rng.uniform01();
    const double wlo = std::pow(10.0, -lo);
    const double whi = std::pow(10.0, -hi);
    v = -std::log10(wlo - p * (wlo - whi));
  }
  return std::pow(10.0, v);
}

double sample_frailty(RngStream& rng, const SimConfig& cfg) {
  if (cfg.mode != SimMode::doubly) {
    throw std::logic_error("sample_frailty requires doubly mode");
  }
  return rng.uniform(cfg.frailty_log10_range[0], cfg.frailty_log10_range[1]);
}

std::vector<double> simulate_sequence(RngStream& rng, double rate,
                                      double horizon) {
  if (rate < 0.0) throw std::invalid_argument("rate must be >= 0");
  std::vector<double> times;
  if (rate == 0.0) return times;
  double t = rng.exponential(rate);
  while (t <= horizon) {
    times.push_back(t);
    t += rng.exponential(rate);
  }
  return times;
}

Dataset simulate_dataset(const SimConfig& cfg) {
  cfg.validate();
  Dataset d;
  d.sequences.resize(cfg.samples);
  d.meta.seed = cfg.seed;
  d.meta.mode = to_string(cfg.mode);
  d.meta.horizon = cfg.horizon;
  d.meta.config = cfg.to_json();

  parallel_for(cfg.samples, cfg.threads, [&](std::size_t m) {
    RngStream rng(substream_seed(cfg.seed, m));
    const double base_rate = sample_base_rate(rng, cfg);
    double generating = base_rate;
    EventSequence s;
    s.id = "s" + std::to_string(m);
    s.horizon = cfg.horizon;
    if (cfg.mode == SimMode::doubly) {
      const double u = sample_frailty(rng, cfg);
      s.frailty_log10 = u;
      generating = base_rate * std::pow(10.0, u);
    }
    s.event_times = simulate_sequence(rng, generating, cfg.horizon);
    if (cfg.covariate_noise_log10 > 0.0) {
      const double noise = cfg.covariate_noise_log10 * rng.normal01();
      s.covariates[kRateCovariate] = base_rate * std::pow(10.0, noise);
      s.covariates[kTrueRateCovariate] = base_rate;
    } else {
      s.covariates[kRateCovariate] = base_rate;
    }
    d.sequences[m] = std::move(s);
  });
  return d;
}

}  // namespace hmpp
