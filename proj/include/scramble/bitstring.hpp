// Copyright 2026 The Scramble Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scramble {

/// Fixed-length sequence of {0,1} site occupations.
///
/// Site 0 is the leftmost character of the ASCII form and the least
/// significant bit of word 0, so the serialized string reads in site order.
class BitString {
 public:
  BitString() = default;
  explicit BitString(int size);

  /// Parses a '0'/'1' string (leftmost character = site 0).
  static BitString from_ascii(std::string_view text);
  /// Builds a string of the given size with ones at `occupied` (0-based).
  static BitString from_sites(int size, std::span<const int> occupied);

  int size() const { return size_; }
  int popcount() const;
  bool test(int site) const {
    return (words_[static_cast<std::size_t>(site) >> 6] >> (site & 63)) & 1u;
  }
  void set(int site, bool value = true);

  /// Ascending list of occupied sites.
  std::vector<int> ones() const;
  /// True iff two adjacent sites are both occupied ("11" substring).
  bool has_adjacent_pair() const;

  std::string to_ascii() const;

  bool operator==(const BitString& other) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
  int size_ = 0;
};

struct BitStringHash {
  std::size_t operator()(const BitString& b) const;
};

/// ASCII-lexicographic order (site 0 compared first).
bool ascii_less(const BitString& a, const BitString& b);

/// Binomial coefficient, saturating at `cap` instead of overflowing.
std::uint64_t binomial_capped(int n, int k,
                              std::uint64_t cap = UINT64_MAX);

}  // namespace scramble
