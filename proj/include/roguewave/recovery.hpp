// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <vector>

#include "roguewave/basis_pursuit.hpp"
#include "roguewave/grid.hpp"
#include "roguewave/sensing.hpp"

namespace roguewave {

struct RecoveryResult {
  ComplexField field;
  std::vector<double> real_coefficients;
  std::vector<double> imag_coefficients;
  int iterations = 0;       // worst channel
  double residual = 0.0;    // worst channel
  bool converged = false;   // both channels
};

/// Basis pursuit on the real and imaginary channels independently, each
/// synthesized by haar_idwt and recombined on `grid`. A channel that fails to
/// converge still contributes its best iterate; check `converged`.
RecoveryResult recover(const Measurements& meas, const Grid1D& grid, const BpConfig& cfg = {});

}  // namespace roguewave
