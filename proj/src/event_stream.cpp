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

#include "hmpp/event_stream.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hmpp {

using nlohmann::json;

double EventSequence::covariate(const std::string& name) const {
  const auto it = covariates.find(name);
  if (it == covariates.end()) {
    throw std::runtime_error("sequence '" + id + "' has no covariate '" +
                             name + "'");
  }
  return it->second;
}

double EventSequence::generating_rate() const {
  const double base = has_covariate(kTrueRateCovariate)
                          ? covariates.at(kTrueRateCovariate)
                          : rate_covariate();
  return frailty_log10 ? base * std::pow(10.0, *frailty_log10) : base;
}

void EventSequence::validate() const {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::runtime_error("sequence '" + id + "': horizon must be positive");
  }
  double prev = 0.0;
  for (const double t : event_times) {
    if (!(t > prev)) {
      throw std::runtime_error("sequence '" + id +
                               "': event times must be strictly ascending and "
                               "positive");
    }
    if (t > horizon) {
      throw std::runtime_error("sequence '" + id +
                               "': event time exceeds horizon");
    }
    prev = t;
  }
  for (const auto& [name, v] : covariates) {
    if (!std::isfinite(v)) {
      throw std::runtime_error("sequence '" + id + "': covariate '" + name +
                               "' is not finite");
    }
  }
}

int count_events_in(const EventSequence& s, double a, double b) {
  if (a > b) throw std::invalid_argument("count_events_in: a > b");
  const auto lo = std::upper_bound(s.event_times.begin(), s.event_times.end(), a);
  const auto hi = std::upper_bound(s.event_times.begin(), s.event_times.end(), b);
  return static_cast<int>(hi - lo);
}

void Dataset::validate() const {
  if (sequences.empty()) throw std::runtime_error("no sequences");
  std::set<std::string> ids;
  for (const auto& s : sequences) {
    s.validate();
    if (!ids.insert(s.id).second) {
      throw std::runtime_error("duplicate sequence id '" + s.id + "'");
    }
  }
}

namespace {

EventRecord parse_line(const std::string& line, std::size_t line_no) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": malformed JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("id") || !j.contains("time") ||
      !j.contains("event") || !j.contains("value")) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": expected keys id, time, event, value");
  }
  EventRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.time = j.at("time").get<double>();
    r.event = j.at("event").get<std::string>();
    if (!j.at("value").is_null()) r.value = j.at("value").get<double>();
  } catch (const json::exception& e) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": bad field type: " + e.what());
  }
  return r;
}

}  // namespace

Dataset parse_event_stream(std::istream& in, double default_horizon) {
  std::vector<EventRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    records.push_back(parse_line(line, line_no));
  }

  // Group by id, preserving first-appearance order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<EventRecord>> by_id;
  for (auto& r : records) {
    if (!by_id.count(r.id)) order.push_back(r.id);
    by_id[r.id].push_back(std::move(r));
  }
  if (order.empty()) throw std::runtime_error("no sequences");

  Dataset d;
  d.meta.horizon = default_horizon;
  for (const auto& id : order) {
    auto& recs = by_id[id];
    std::stable_sort(recs.begin(), recs.end(),
                     [](const EventRecord& a, const EventRecord& b) {
                       return a.time < b.time;
                     });
    EventSequence s;
    s.id = id;
    s.horizon = default_horizon;
    for (const auto& r : recs) {
      if (r.time < 0.0) {
        throw std::runtime_error("sequence '" + id + "': negative time");
      }
      if (r.event == kOutcomeEvent) {
        s.event_times.push_back(r.time);
      } else if (r.event == kFrailtyEvent) {
        if (!r.value) {
          throw std::runtime_error("sequence '" + id +
                                   "': frailty record without value");
        }
        s.frailty_log10 = *r.value;
      } else {
        if (!r.value) {
          throw std::runtime_error("sequence '" + id + "': covariate '" +
                                   r.event + "' without value");
        }
        if (r.event == kRateCovariate && s.has_covariate(kRateCovariate)) {
          throw std::runtime_error("sequence '" + id +
                                   "': duplicate rate record");
        }
        s.covariates[r.event] = *r.value;
      }
    }
    s.validate();
    d.sequences.push_back(std::move(s));
  }
  return d;
}

Dataset parse_event_stream(const std::string& text, double default_horizon) {
  std::istringstream in(text);
  return parse_event_stream(in, default_horizon);
}

namespace {

std::string record_line(const std::string& id, double time,
                        const std::string& event,
                        const std::optional<double>& value) {
  json j;
  j["id"] = id;
  j["time"] = time;
  j["event"] = event;
  if (value) {
    j["value"] = *value;
  } else {
    j["value"] = nullptr;
  }
  return j.dump();
}

}  // namespace

std::string serialize_event_stream(const Dataset& d) {
  std::string out;
  for (const auto& s : d.sequences) {
    if (s.has_covariate(kRateCovariate)) {
      out += record_line(s.id, 0.0, kRateCovariate,
                         s.covariates.at(kRateCovariate));
      out += '\n';
    }
    for (const auto& [name, v] : s.covariates) {
      if (name == kRateCovariate) continue;
      out += record_line(s.id, 0.0, name, v);
      out += '\n';
    }
    if (s.frailty_log10) {
      out += record_line(s.id, 0.0, kFrailtyEvent, *s.frailty_log10);
      out += '\n';
    }
    for (const double t : s.event_times) {
      out += record_line(s.id, t, kOutcomeEvent, std::nullopt);
      out += '\n';
    }
  }
  return out;
}

std::filesystem::path sidecar_path(const std::filesystem::path& data_path) {
  std::filesystem::path p = data_path;
  p.replace_extension(".meta.json");
  return p;
}

void save_dataset(const Dataset& d, const std::filesystem::path& data_path) {
  {
    std::ofstream out(data_path);
    if (!out) {
      throw std::runtime_error("cannot write " + data_path.string());
    }
    out << serialize_event_stream(d);
  }
  json meta;
  meta["schema"] = d.meta.schema;
  meta["seed"] = d.meta.seed;
  meta["mode"] = d.meta.mode;
  meta["horizon"] = d.meta.horizon;
  if (!d.meta.config.is_null()) meta["config"] = d.meta.config;
  std::ofstream side(sidecar_path(data_path));
  if (!side) {
    throw std::runtime_error("cannot write " + sidecar_path(data_path).string());
  }
  side << meta.dump(2) << '\n';
}

Dataset load_dataset(const std::filesystem::path& data_path) {
  DatasetMeta meta;
  const auto side = sidecar_path(data_path);
  if (std::filesystem::exists(side)) {
    std::ifstream in(side);
    json j = json::parse(in);
    meta.schema = j.value("schema", 1);
    meta.seed = j.value("seed", std::uint64_t{0});
    meta.mode = j.value("mode", std::string("external"));
    meta.horizon = j.value("horizon", 10.0);
    if (j.contains("config")) meta.config = j.at("config");
  }
  std::ifstream in(data_path);
  if (!in) {
    throw std::runtime_error("cannot read " + data_path.string());
  }
  Dataset d = parse_event_stream(in, meta.horizon);
  d.meta = std::move(meta);
  return d;
}

}  // namespace hmpp
