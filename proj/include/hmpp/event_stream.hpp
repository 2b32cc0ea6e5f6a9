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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hmpp {

/// One line of the on-disk stream: {"id": str, "time": float, "event": str,
/// "value": float|null}.
struct EventRecord {
  std::string id;
  double time = 0.0;
  std::string event;
  std::optional<double> value;
};

/// Event label carried by outcome records; everything else on the stream is
/// a covariate record.
inline constexpr const char* kOutcomeEvent = "y";
/// Covariate holding the per-sample base rate, written at time 0.
inline constexpr const char* kRateCovariate = "rate";
/// Covariate holding the uncorrupted base rate when the exposed "rate" has
/// been noised; absent otherwise.
inline constexpr const char* kTrueRateCovariate = "rate_true";
/// Record label for the latent log10 frailty of doubly-stochastic samples.
inline constexpr const char* kFrailtyEvent = "frailty_log10";

/// One sample: outcome event times on (0, horizon] plus covariates.
///
/// The frailty (when present) is generator-side state: it is kept off the
/// covariate map so models can never condition on it.
struct EventSequence {
  std::string id;
  double horizon = 10.0;
  std::vector<double> event_times;  // strictly ascending, all in (0, horizon]
  std::map<std::string, double> covariates;
  std::optional<double> frailty_log10;

  std::size_t event_count() const { return event_times.size(); }
  bool has_covariate(const std::string& name) const {
    return covariates.count(name) > 0;
  }
  double covariate(const std::string& name) const;
  /// Base rate exposed to models; throws if the sequence carries none.
  double rate_covariate() const { return covariate(kRateCovariate); }
  /// The intensity that actually generated the events: the true base rate
  /// (falling back to the exposed one) times 10^frailty.
  double generating_rate() const;

  void validate() const;
};

/// Number of event times in the half-open window (a, b].
int count_events_in(const EventSequence& s, double a, double b);

struct DatasetMeta {
  int schema = 1;
  std::uint64_t seed = 0;
  std::string mode = "external";  // "singly" | "doubly" | "external"
  double horizon = 10.0;
  nlohmann::json config;  // resolved generator config, when simulated
};

struct Dataset {
  std::vector<EventSequence> sequences;
  DatasetMeta meta;

  std::size_t size() const { return sequences.size(); }
  void validate() const;  // unique ids, per-sequence invariants
};

/// Parse a JSONL event stream. Records are grouped by id (first-appearance
/// order), sorted by time within each id; "y" records become event times and
/// any other label becomes a covariate. Throws std::runtime_error naming the
/// offending line or id on malformed or invalid input.
Dataset parse_event_stream(std::istream& in, double default_horizon = 10.0);
Dataset parse_event_stream(const std::string& text,
                           double default_horizon = 10.0);

/// Inverse of parse_event_stream: one JSON object per line, covariate
/// records first (rate, then the rest in name order, then frailty), then
/// outcome events in time order.
std::string serialize_event_stream(const Dataset& d);

/// Metadata sidecar next to a dataset file: data.jsonl -> data.meta.json.
std::filesystem::path sidecar_path(const std::filesystem::path& data_path);

/// Write the JSONL stream plus its metadata sidecar.
void save_dataset(const Dataset& d, const std::filesystem::path& data_path);

/// Read a JSONL stream, honouring the sidecar (horizon, provenance) when one
/// is present.
Dataset load_dataset(const std::filesystem::path& data_path);

}  // namespace hmpp
