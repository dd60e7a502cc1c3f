// Copyright 2026 The Scramble Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace scramble {

/// Counter-based generator (Philox4x32-10). A (seed, stream) pair selects an
/// independent sequence, so per-sample streams are reproducible no matter
/// which thread runs them or in which order.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, n), unbiased (rejection sampling). n >= 1.
  std::uint64_t below(std::uint64_t n);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int have_ = 0;  // unread 32-bit lanes left in block_
};

/// Fisher-Yates permutation of {0, ..., n-1}.
std::vector<int> random_permutation(int n, PhiloxStream& rng);

/// Deterministic sub-seed digest for derived streams (splitmix64 chain).
std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> tags);

}  // namespace scramble
