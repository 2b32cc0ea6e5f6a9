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

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <vector>

namespace hmpp {

using ArrX = Eigen::ArrayXd;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

/// Stateless 64-bit mix (splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for the index-th substream of a master seed. Substreams are
/// independent of the order in which they are instantiated, so parallel
/// generation schedules cannot change results.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Deterministic random stream. All floating-point draws are derived from
/// raw mt19937_64 output with fixed arithmetic; nothing here depends on
/// standard-library distribution implementations, so streams are
/// bit-reproducible across platforms and toolchains.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1); never returns an exact endpoint.
  double uniform_open01() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Exponential inter-arrival gap; strictly positive for rate > 0.
  double exponential(double rate) { return -std::log(uniform_open01()) / rate; }

  /// Standard normal via Box-Muller (one draw per call, second discarded).
  double normal01() {
    const double u1 = uniform_open01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Uniform integer in [0, n). Modulo bias is irrelevant at 64 bits.
  std::size_t bounded(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

 private:
  std::mt19937_64 gen_;
};

/// In-place Fisher-Yates shuffle driven by an RngStream.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, RngStream& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.bounded(i)]);
  }
}

/// Run fn(i) for i in [0, n). Work is split into contiguous chunks, one per
/// thread; each index writes only its own output slot, so results never
/// depend on the thread count. Reductions over the outputs must be done by
/// the caller in index order.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hmpp
