// Copyright 2026 The larm Authors
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

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace larm {

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer. Bijective on u64.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

// Counter-based generator. Output i of stream (seed, stream_id) is
//
//   mix64(key + (i + 1) * kGolden64),
//   key = mix64((seed + 1) * kGolden64 ^ mix64(stream_id + kGolden64))
//
// Pure integer arithmetic, so a fixed (seed, stream_id) yields the same
// stream on every platform. Substreams with distinct stream_ids are
// independent and can be consumed concurrently.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream_id = 0)
      : key_(mix64((seed + 1) * kGolden64 ^ mix64(stream_id + kGolden64))) {}

  Rng(std::uint64_t seed, std::string_view stream_name)
      : Rng(seed, fnv1a64(stream_name)) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden64); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n >= 1. Lemire multiply-shift.
  std::int64_t uniform_int(std::int64_t n) {
    return static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(next_u64()) *
         static_cast<unsigned __int128>(n)) >>
        64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; consumes two uniforms per draw.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Marsaglia-Tsang; shape < 1 handled via the boost identity
  // gamma(a) = gamma(a + 1) * U^(1/a).
  double gamma(double shape) {
    if (shape < 1.0) {
      double u = 1.0 - uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = 1.0 - uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Symmetric Dirichlet on the n-simplex.
  std::vector<double> dirichlet(std::size_t n, double alpha) {
    std::vector<double> p(n);
    double sum = 0.0;
    for (auto& v : p) {
      v = gamma(alpha);
      sum += v;
    }
    if (sum <= 0.0) {
      for (auto& v : p) v = 1.0 / static_cast<double>(n);
      return p;
    }
    for (auto& v : p) v /= sum;
    return p;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline std::vector<double> rng_stream(std::uint64_t seed, std::size_t n,
                                      std::uint64_t stream_id = 0) {
  Rng rng(seed, stream_id);
  std::vector<double> out(n);
  for (auto& v : out) v = rng.uniform();
  return out;
}

}  // namespace larm
