// Copyright 2026 The Scramble Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "scramble/bitstring.hpp"

namespace scramble {

// Bijection between logical occupation strings on l_tau sites and physical
// occupation strings on l = l_tau + n - 1 sites with no two adjacent
// occupied sites. Encoding substitutes 0 -> "0", 1 -> "01" and drops the
// leading character; decoding parses the token stream back after restoring
// that character.

/// Logical -> physical encoding. Total on valid logical strings.
BitString logical_to_physical(const BitString& logical);

/// Physical -> logical decoding; exact inverse of logical_to_physical.
/// Throws ConstraintViolation if the input has two adjacent occupied sites.
BitString physical_to_logical(const BitString& physical);

/// Logical coordinates of the physical particles: with occupied physical
/// sites j_0 < j_1 < ... (0-based), returns k_i = j_i - i. Equal to
/// physical_to_logical(n).ones().
std::vector<int> particle_coordinates(const BitString& physical);

/// True iff no two adjacent sites are occupied.
bool check_constraint(const BitString& bits);

/// Indexed fixed-particle-number sector basis in ASCII-lexicographic order,
/// with or without the adjacency constraint.
class ConfigBasis {
 public:
  static ConfigBasis constrained(int length, int particles,
                                 std::uint64_t dim_cap = UINT64_MAX);
  static ConfigBasis unconstrained(int length, int particles,
                                   std::uint64_t dim_cap = UINT64_MAX);

  int length() const { return length_; }
  int particles() const { return particles_; }
  bool is_constrained() const { return constrained_; }
  long size() const { return static_cast<long>(configs_.size()); }
  const std::vector<BitString>& configs() const { return configs_; }
  const BitString& config(long i) const {
    return configs_[static_cast<std::size_t>(i)];
  }
  /// Ordinal of a config in this basis, or -1 if absent.
  long index_of(const BitString& config) const;

  static ConfigBasis assemble(int length, int particles, bool constrained,
                              std::vector<BitString> configs);

 private:
  int length_ = 0;
  int particles_ = 0;
  bool constrained_ = true;
  std::vector<BitString> configs_;
  std::unordered_map<BitString, long, BitStringHash> index_;
};

/// All constraint-satisfying physical configs of the (length, particles)
/// sector. Throws InvalidSector unless 0 <= particles <= (length+1)/2.
ConfigBasis enumerate_physical(int length, int particles);

/// All C(length, particles) occupation strings (no constraint).
ConfigBasis enumerate_logical(int length, int particles);

}  // namespace scramble
