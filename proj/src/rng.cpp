// Copyright 2026 The Scramble Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramble/rng.hpp"

#include <cmath>

namespace scramble {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& x,
                         const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * x[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * x[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream) {}

void PhiloxStream::refill() {
  std::array<std::uint32_t, 4> x = {
      static_cast<std::uint32_t>(counter_),
      static_cast<std::uint32_t>(counter_ >> 32),
      static_cast<std::uint32_t>(stream_),
      static_cast<std::uint32_t>(stream_ >> 32)};
  std::array<std::uint32_t, 2> k = key_;
  for (int round = 0; round < 10; ++round) {
    philox_round(x, k);
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  block_ = x;
  have_ = 4;
  ++counter_;
}

std::uint64_t PhiloxStream::next_u64() {
  if (have_ < 2) refill();
  const std::uint32_t lo = block_[static_cast<std::size_t>(4 - have_)];
  const std::uint32_t hi = block_[static_cast<std::size_t>(5 - have_)];
  have_ -= 2;
  return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

double PhiloxStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t PhiloxStream::below(std::uint64_t n) {
  // Rejection from the top to stay unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

std::vector<int> random_permutation(int n, PhiloxStream& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  }
  return p;
}

std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> tags) {
  std::uint64_t state = seed ^ 0xA0761D6478BD642FULL;
  std::uint64_t out = splitmix64(state);
  for (std::uint64_t tag : tags) {
    state ^= tag + 0x9E3779B97F4A7C15ULL + (state << 5);
    out = splitmix64(state);
  }
  return out;
}

}  // namespace scramble
