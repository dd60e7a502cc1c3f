// Copyright 2026 The Scramble Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramble/basis_map.hpp"

#include <string>

#include "scramble/errors.hpp"

namespace scramble {

BitString logical_to_physical(const BitString& logical) {
  const int l_tau = logical.size();
  const int n = logical.popcount();
  const int l = l_tau + n - 1;
  BitString out(l < 0 ? 0 : l);
  // Expanded position of logical site k is k plus one slot per preceding
  // particle; dropping the leading '0' shifts everything left by one.
  int shift = 0;
  for (int k = 0; k < l_tau; ++k) {
    if (logical.test(k)) {
      out.set(k + shift);  // the '1' of the "01" token, minus the dropped char
      ++shift;
    }
  }
  return out;
}

BitString physical_to_logical(const BitString& physical) {
  if (physical.has_adjacent_pair())
    throw ConstraintViolation("physical config has adjacent occupied sites");
  const int l = physical.size();
  const int n = physical.popcount();
  BitString out(l + 1 - n);
  // Parse "0"/"01" tokens of the string with the leading '0' restored: an
  // occupied physical site j always terminates a "01" token.
  int index = 0;  // particles seen so far
  for (int j = 0; j < l; ++j) {
    if (physical.test(j)) {
      out.set(j - index);
      ++index;
    }
  }
  return out;
}

std::vector<int> particle_coordinates(const BitString& physical) {
  if (physical.has_adjacent_pair())
    throw ConstraintViolation("physical config has adjacent occupied sites");
  std::vector<int> ks = physical.ones();
  for (std::size_t i = 0; i < ks.size(); ++i) ks[i] -= static_cast<int>(i);
  return ks;
}

bool check_constraint(const BitString& bits) {
  return !bits.has_adjacent_pair();
}

namespace {

void enumerate_rec(int length, bool constrained, int site, int remaining,
                   bool prev_occupied, BitString& scratch,
                   std::vector<BitString>& out) {
  if (remaining == 0) {
    out.push_back(scratch);
    return;
  }
  const int left = length - site;
  // Capacity prune: most particles that still fit in `left` sites.
  const int capacity =
      constrained ? (left + (prev_occupied ? 0 : 1)) / 2 : left;
  if (remaining > capacity) return;
  // '0' branch first keeps ASCII-lexicographic order.
  enumerate_rec(length, constrained, site + 1, remaining, false, scratch, out);
  if (!(constrained && prev_occupied)) {
    scratch.set(site, true);
    enumerate_rec(length, constrained, site + 1, remaining - 1, true, scratch,
                  out);
    scratch.set(site, false);
  }
}

ConfigBasis build_basis(int length, int particles, bool constrained,
                        std::uint64_t dim_cap) {
  if (length < 0 || particles < 0)
    throw InvalidSector("negative sector parameters");
  if (constrained) {
    if (2 * particles > length + 1)
      throw InvalidSector(
          "constrained sector requires particles <= (length+1)/2");
  } else if (particles > length) {
    throw InvalidSector("particles exceed length");
  }
  const std::uint64_t dim =
      constrained ? binomial_capped(length + 1 - particles, particles)
                  : binomial_capped(length, particles);
  if (dim > dim_cap)
    throw SectorTooLarge("sector dimension " + std::to_string(dim) +
                         " exceeds cap " + std::to_string(dim_cap));
  std::vector<BitString> configs;
  configs.reserve(static_cast<std::size_t>(dim));
  BitString scratch(length);
  enumerate_rec(length, constrained, 0, particles, false, scratch, configs);
  return ConfigBasis::assemble(length, particles, constrained,
                               std::move(configs));
}

}  // namespace

ConfigBasis ConfigBasis::assemble(int length, int particles, bool constrained,
                                  std::vector<BitString> configs) {
  ConfigBasis basis;
  basis.length_ = length;
  basis.particles_ = particles;
  basis.constrained_ = constrained;
  basis.configs_ = std::move(configs);
  basis.index_.reserve(basis.configs_.size());
  for (long i = 0; i < basis.size(); ++i)
    basis.index_.emplace(basis.configs_[static_cast<std::size_t>(i)], i);
  return basis;
}

ConfigBasis ConfigBasis::constrained(int length, int particles,
                                     std::uint64_t dim_cap) {
  return build_basis(length, particles, true, dim_cap);
}

ConfigBasis ConfigBasis::unconstrained(int length, int particles,
                                       std::uint64_t dim_cap) {
  return build_basis(length, particles, false, dim_cap);
}

long ConfigBasis::index_of(const BitString& config) const {
  auto it = index_.find(config);
  return it == index_.end() ? -1 : it->second;
}

ConfigBasis enumerate_physical(int length, int particles) {
  return ConfigBasis::constrained(length, particles);
}

ConfigBasis enumerate_logical(int length, int particles) {
  return ConfigBasis::unconstrained(length, particles);
}

}  // namespace scramble
