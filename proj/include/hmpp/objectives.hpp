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
#include "hmpp/path.hpp"
#include "hmpp/types.hpp"

namespace hmpp {

/// Where the reference rate for interval weighting comes from.
///   true_rate       -- the generating intensity (frailty included);
///   plugin_detached -- the model's own current predictions, treated as
///                      constants with respect to the parameter gradient;
///   constant_one    -- no reweighting (standard likelihood training).
enum class OracleSource { true_rate, plugin_detached, constant_one };

/// Attention coefficient gamma and stability factor epsilon.
///
/// gamma controls how strongly low-rate intervals are up-weighted:
/// gamma = 10 gives exact reciprocal-rate weighting, gamma = 1 leaves every
/// interval at weight 1 and reduces training to the standard likelihood.
/// epsilon floors the reference rate so near-zero references cannot blow
/// the weights up.
struct WeightingConfig {
  double gamma = 1.0;
  double epsilon = 0.0;
  OracleSource oracle = OracleSource::constant_one;

  void validate() const;
};

std::string to_string(OracleSource o);
OracleSource oracle_from_string(const std::string& s);

/// Weight of an interval with reference rate lambda_ref:
///   w = max(lambda_ref, epsilon)^(-log10 gamma)   (epsilon > 0)
///   w = lambda_ref^(-log10 gamma)                 (epsilon = 0)
/// Throws std::domain_error when lambda_ref <= 0 and epsilon = 0.
double interval_weight(double lambda_ref, const WeightingConfig& cfg);

/// Per-sequence, per-cell weights. `normalized` records whether the
/// weights were rescaled to global mean 1.
struct IntervalWeights {
  std::vector<ArrX> per_cell;
  bool normalized = false;

  std::size_t count() const;
  double sum() const;
  double sum_squares() const;
};

/// Apply interval_weight cell-wise to the reference paths; optionally
/// rescale so the mean weight over all cells is exactly 1. A constant_one
/// oracle yields unit weights regardless of the reference values.
IntervalWeights compute_weights(const std::vector<PiecewiseConstantPath>& reference,
                                const WeightingConfig& cfg, bool normalize);

IntervalWeights unit_weights(const std::vector<ArrX>& shapes_like);

struct ObjectiveValue {
  double total = 0.0;
  VecX per_sequence;
};

/// Per-sequence cell statistics: event counts N_k and cell widths dt_k.
struct CellData {
  ArrX counts;
  ArrX widths;
};

CellData make_cell_data(const EventSequence& s, const TimeGrid& grid);

/// Standard log-likelihood, evaluated cell-wise:
///   sum_k [ N_k log(rate_k) - rate_k dt_k ]
/// which equals the event-time form sum_i log(rate(t_i)) - integral(rate)
/// for cell-constant rates.
ObjectiveValue log_likelihood(const std::vector<ArrX>& rates,
                              const std::vector<CellData>& cells);

/// Adjusted log-likelihood: the same cell terms, each multiplied by its
/// interval weight. With unit weights this is exactly log_likelihood.
ObjectiveValue adjusted_log_likelihood(const std::vector<ArrX>& rates,
                                       const std::vector<CellData>& cells,
                                       const IntervalWeights& w);

/// d(adjusted log-likelihood)/d(rate_k) per cell:
///   w_k (N_k / rate_k - dt_k).
/// Weights carry no gradient; they are constants here by construction.
std::vector<ArrX> objective_gradient(const std::vector<ArrX>& rates,
                                     const std::vector<CellData>& cells,
                                     const IntervalWeights& w);

// Dataset-level conveniences (paths aligned with d.sequences).
std::vector<CellData> dataset_cell_data(const Dataset& d);
ObjectiveValue log_likelihood(const std::vector<PiecewiseConstantPath>& paths,
                              const Dataset& d);
ObjectiveValue adjusted_log_likelihood(
    const std::vector<PiecewiseConstantPath>& paths, const Dataset& d,
    const IntervalWeights& w);

struct EssResult {
  double ess = 0.0;
  double per_example = 0.0;
};

/// Effective sample size (sum w)^2 / sum w^2 and its per-example form
/// ess / count. Equal weights give per_example = 1.
EssResult effective_sample_size(const IntervalWeights& w);
EssResult effective_sample_size(const ArrX& weights);

}  // namespace hmpp
