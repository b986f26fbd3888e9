// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <stdexcept>
#include <string>

namespace roguewave {

enum class ErrorCode {
  InvalidArgument,
  LengthNotPowerOfTwo,
  ScaleOutOfRange,
  MTooLarge,
  PlanMismatch,
  GridMismatch,
  ZeroReference,
  DegenerateSpectrum,
  StepTooLarge,
  NonFiniteValue,
  NotConverged,
  Io,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace roguewave
