// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "roguewave/sensing.hpp"

namespace roguewave {

struct BpConfig {
  /// Converged when ||A c - g||_2 <= feasibility_tol * max(1, ||g||_2).
  double feasibility_tol = 1e-10;
  int max_iterations = 50000;
  /// ADMM shrinkage threshold relative to ||A^T g||_inf.
  double relative_threshold = 0.05;
};

/// Throws InvalidArgument on a non-positive tolerance or iteration budget.
void validate(const BpConfig& cfg);

struct BpSolution {
  std::vector<double> coefficients;  // Haar coefficients, DwtCoefficients layout
  int iterations = 0;
  double residual = 0.0;  // ||A c - g||_2 / max(1, ||g||_2)
  bool converged = false;
};

/// min ||c||_1 subject to A c = g, where A synthesizes a length-n signal from
/// its Haar coefficients and keeps the samples at plan.indices.
///
/// A has orthonormal rows, so the projection onto {c : A c = g} is
/// c - A^T (A c - g) and costs two fast transforms. The solver is ADMM on
/// that projection and the l1 proximal map; once the iterate stabilizes its
/// support is polished by an exact least-squares solve restricted to it.
///
/// Never throws on non-convergence: the returned solution has
/// converged == false and the best iterate found. Throws PlanMismatch when
/// g.size() != plan.m or plan.n != n.
BpSolution basis_pursuit(std::span<const double> g, const SensingPlan& plan, std::size_t n,
                         const BpConfig& cfg = {});

/// A c for the operator above (synthesis then gather).
std::vector<double> apply_sensing_operator(std::span<const double> coefficients,
                                           const SensingPlan& plan);

}  // namespace roguewave
