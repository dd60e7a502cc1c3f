// Copyright 2026 The Scramble Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "scramble/bitstring.hpp"

namespace scramble {

using Complex = std::complex<double>;

/// Open-boundary nearest-neighbor hopping (unit amplitude, zero diagonal),
/// stored as its spectral decomposition. Eigenvalues are
/// 2 cos(q pi / (size+1)), q = 1..size, in ascending order.
class HoppingHamiltonian {
 public:
  static HoppingHamiltonian build(int size);

  int size() const { return static_cast<int>(evals_.size()); }
  const Eigen::VectorXd& eigenvalues() const { return evals_; }
  const Eigen::MatrixXd& eigenvectors() const { return evecs_; }

  /// exp(-i H t) as a dense matrix.
  Eigen::MatrixXcd propagator(double t) const;

 private:
  Eigen::VectorXd evals_;
  Eigen::MatrixXd evecs_;
};

/// N-particle Slater determinant state: columns are the occupied
/// single-particle wavefunctions on the logical chain.
struct SlaterState {
  Eigen::MatrixXcd orbitals;  // l_tau x n, orthonormal columns
  double time = 0.0;

  int l_tau() const { return static_cast<int>(orbitals.rows()); }
  int particles() const { return static_cast<int>(orbitals.cols()); }
};

/// Product state with unit-vector orbitals at the occupied sites of m0
/// (ascending site order), at time zero.
SlaterState initial_slater(const BitString& m0);

/// Slater state of the n lowest single-particle levels.
SlaterState ground_state_slater(const HoppingHamiltonian& h, int n);

/// Applies exp(-i h dt); advances the time stamp by dt.
SlaterState evolve(const HoppingHamiltonian& h, const SlaterState& s,
                   double dt);

/// Determinant amplitude in (log magnitude, unit phase) form, so tiny
/// amplitudes at large particle number stay representable.
struct LogAmplitude {
  double log_mag;  // -inf for an exactly zero determinant
  Complex phase;   // unit modulus (1 when log_mag == -inf)

  Complex value() const;
  bool is_zero() const;
};

/// <m|state>: determinant of the orbital rows at the occupied sites of m.
/// Throws SectorMismatch unless popcount(m) equals the particle number.
LogAmplitude log_amplitude(const SlaterState& s, const BitString& m);
Complex amplitude(const SlaterState& s, const BitString& m);

/// amplitude(m') / amplitude(m) where m' moves the particle at `from_site`
/// to the empty `to_site`; O(N^2) via a single linear solve. Throws
/// DegenerateAmplitude when |amplitude(m)| underflows.
Complex amplitude_ratio(const SlaterState& s, const BitString& m,
                        int from_site, int to_site);

/// Same ratio through two full determinant evaluations (reference path).
Complex amplitude_ratio_by_dets(const SlaterState& s, const BitString& m,
                                int from_site, int to_site);

/// One-body logical correlation matrix: entry (k, k') = <f_k^dag f_k'>.
Eigen::MatrixXcd logical_correlation(const SlaterState& s);

/// JSON checkpoint: {"L_tau", "N", "time", "orbitals"} with [re, im] pairs.
std::string slater_state_to_json(const SlaterState& s);
SlaterState slater_state_from_json(const std::string& text);

}  // namespace scramble
