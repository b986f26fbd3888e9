// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <cstddef>

#include "roguewave/grid.hpp"

namespace roguewave {

struct SplitStepConfig {
  /// Largest allowed nonlinear phase rotation max|psi|^2 * |dt| per step
  /// (radians). The linear substep is exact and needs no bound.
  double max_phase_per_step = 0.5;
};

/// Integrates i psi_t + psi_xx / 2 + |psi|^2 psi = 0 from field.time() to
/// t_target with second-order Strang splitting on the periodic grid
/// (half nonlinear step, full linear step in Fourier space, half nonlinear).
///
/// The linear substep is exact in Fourier space and the nonlinear substep
/// preserves |psi| pointwise, so the discrete L2 norm is conserved up to
/// round-off.
///
/// Throws StepTooLarge when the per-step phase bound in cfg is exceeded and
/// NonFiniteValue if the solution blows up.
ComplexField propagate_nlse(const ComplexField& field, double t_target, std::size_t n_steps,
                            const SplitStepConfig& cfg = {});

/// Steps needed for the default resolution of 1000 steps per unit time.
std::size_t default_nlse_steps(double duration);

}  // namespace roguewave
