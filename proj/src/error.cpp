// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/error.hpp"

namespace roguewave {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LengthNotPowerOfTwo: return "LengthNotPowerOfTwo";
    case ErrorCode::ScaleOutOfRange: return "ScaleOutOfRange";
    case ErrorCode::MTooLarge: return "MTooLarge";
    case ErrorCode::PlanMismatch: return "PlanMismatch";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace roguewave
