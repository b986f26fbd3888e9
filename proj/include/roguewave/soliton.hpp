// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <string_view>

#include "roguewave/grid.hpp"

namespace roguewave {

enum class SolitonKind { Peregrine, AkhmedievPeregrine };

/// Accepts "peregrine" and "ap" (also "akhmediev-peregrine").
SolitonKind parse_soliton_kind(std::string_view name);
std::string_view to_string(SolitonKind kind) noexcept;

/// First-order rational solution of i psi_t + psi_xx / 2 + |psi|^2 psi = 0.
Complex peregrine(double x, double t) noexcept;

/// Second-order rational solution of the same equation. Peak modulus 5 at the
/// origin, unit background.
Complex akhmediev_peregrine(double x, double t) noexcept;

/// The denominator polynomial of akhmediev_peregrine; strictly positive.
double akhmediev_peregrine_denominator(double x, double t) noexcept;

ComplexField evaluate_field(SolitonKind kind, const Grid1D& grid, double t);

/// Same as evaluate_field with the solution centered at x = center.
ComplexField evaluate_field_centered(SolitonKind kind, const Grid1D& grid, double t,
                                     double center);

}  // namespace roguewave
