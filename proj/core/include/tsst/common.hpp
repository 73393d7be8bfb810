// Copyright 2026 The tsst Authors
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
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsst {

// ---------------------------------------------------------------------------
// Error taxonomy. Structural problems (shape/layout), configuration problems,
// bad caller input, numeric failures (NaN/Inf), and I/O or parse failures each
// get their own type so the CLI can map them onto exit codes.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor shape / structure mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid build-time or run-time configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller-supplied data violates a precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values where finite ones are required.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed structured-text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Scene synthesis could not satisfy placement constraints.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Shapes
// ---------------------------------------------------------------------------

using Shape = std::vector<std::size_t>;

inline std::size_t numel(const Shape& s) {
  std::size_t n = 1;
  for (std::size_t d : s) n *= d;
  return n;
}

inline bool same_shape(const Shape& a, const Shape& b) { return a == b; }

inline std::string shape_str(const Shape& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += "]";
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic hashing / RNG stream derivation. Every random draw in the
// project flows from an explicit seed through these helpers; nothing uses
// global rand().
// ---------------------------------------------------------------------------

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and a label.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::string_view label,
                                    std::uint64_t index = 0) {
  return splitmix64(base ^ splitmix64(fnv1a(label) + 0x9e3779b97f4a7c15ull * (index + 1)));
}

// ---------------------------------------------------------------------------
// Operation counters. Thread-local, cheap, used by complexity regression
// tests (window-attention pair counts, deformable sampling counts, MAC
// counts of dense kernels). Forward-pass work only.
// ---------------------------------------------------------------------------

struct OpCounters {
  std::uint64_t bilinear_points = 0;  // sampled points (one per point, any channel width)
  std::uint64_t attn_pairs = 0;       // query-key interactions, summed over heads
  std::uint64_t mac_flops = 0;        // multiply-accumulate count of dense kernels

  void reset() { *this = OpCounters{}; }
};

OpCounters& op_counters();

}  // namespace tsst
