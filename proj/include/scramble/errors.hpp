// Copyright 2026 The Scramble Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace scramble {

/// Coarse failure classes; these double as CLI exit codes.
enum class ErrorCode : int {
  invalid_input = 2,
  resource_limit = 3,
  numerical_failure = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ConstraintViolation : Error {
  explicit ConstraintViolation(const std::string& what)
      : Error(ErrorCode::invalid_input, what) {}
};

struct InvalidSector : Error {
  explicit InvalidSector(const std::string& what)
      : Error(ErrorCode::invalid_input, what) {}
};

struct SectorMismatch : Error {
  explicit SectorMismatch(const std::string& what)
      : Error(ErrorCode::invalid_input, what) {}
};

struct EmptyBatch : Error {
  explicit EmptyBatch(const std::string& what)
      : Error(ErrorCode::invalid_input, what) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what)
      : Error(ErrorCode::invalid_input, what) {}
};

struct SectorTooLarge : Error {
  explicit SectorTooLarge(const std::string& what)
      : Error(ErrorCode::resource_limit, what) {}
};

struct DegenerateAmplitude : Error {
  explicit DegenerateAmplitude(const std::string& what)
      : Error(ErrorCode::numerical_failure, what) {}
};

struct NumericalUnderflow : Error {
  explicit NumericalUnderflow(const std::string& what)
      : Error(ErrorCode::numerical_failure, what) {}
};

struct FitFailure : Error {
  explicit FitFailure(const std::string& what)
      : Error(ErrorCode::numerical_failure, what) {}
};

}  // namespace scramble
