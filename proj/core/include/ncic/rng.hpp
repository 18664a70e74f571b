// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace ncic {

// Counter-based generator: every value is a pure function of (key, index),
// so draws are reproducible regardless of evaluation order or chunking.
namespace rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// Final avalanche stage of splitmix64. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derives an independent key per (seed, stream). Distinct streams of the same
// seed never share a counter sequence.
constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix64(mix64(seed + kGolden) ^ mix64(stream + 0x6a09e667f3bcc909ull));
}

constexpr std::uint64_t word_at(std::uint64_t key, std::uint64_t index) noexcept {
  return mix64(key + (index + 1) * kGolden);
}

// Uniform on the open interval (0,1): the half-ulp offset keeps both endpoints
// unattainable, so log(u) below is always finite.
inline double uniform_at(std::uint64_t key, std::uint64_t index) noexcept {
  return (static_cast<double>(word_at(key, index) >> 11) + 0.5) * 0x1p-53;
}

inline double exponential_at(std::uint64_t key, std::uint64_t index, double mean) noexcept {
  return -mean * std::log(uniform_at(key, index));
}

// Work-splitting granularity for batch sampling. Results do not depend on it;
// it only bounds how much contiguous index space one batch touches.
inline constexpr std::size_t kDefaultChunk = 65536;

}  // namespace rng

inline constexpr std::uint64_t kDefaultSeed = 1;

}  // namespace ncic
