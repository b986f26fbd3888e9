// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/soliton.hpp"

#include <string>

#include "roguewave/error.hpp"

namespace roguewave {

SolitonKind parse_soliton_kind(std::string_view name) {
  if (name == "peregrine") return SolitonKind::Peregrine;
  if (name == "ap" || name == "akhmediev-peregrine") return SolitonKind::AkhmedievPeregrine;
  throw Error(ErrorCode::InvalidArgument, "unknown soliton '" + std::string(name) + "'");
}

std::string_view to_string(SolitonKind kind) noexcept {
  return kind == SolitonKind::Peregrine ? "peregrine" : "ap";
}

Complex peregrine(double x, double t) noexcept {
  const double denom = 1.0 + 4.0 * x * x + 4.0 * t * t;
  const Complex rational = Complex(1.0, 2.0 * t) * (4.0 / denom);
  return (1.0 - rational) * std::polar(1.0, t);
}

double akhmediev_peregrine_denominator(double x, double t) noexcept {
  const double x2 = x * x, t2 = t * t;
  const double x4 = x2 * x2, t4 = t2 * t2;
  return (0.75 + 9.0 * x2 + 4.0 * x4 + (16.0 / 3.0) * x4 * x2 + 33.0 * t2 + 36.0 * t4 +
          (16.0 / 3.0) * t4 * t2 - 24.0 * t2 * x2 + 16.0 * t2 * x4 + 16.0 * t4 * x2) /
         8.0;
}

Complex akhmediev_peregrine(double x, double t) noexcept {
  const double x2 = x * x, t2 = t * t;
  const double x4 = x2 * x2, t4 = t2 * t2;
  const double g = 0.375 - 3.0 * x2 - 2.0 * x4 - 9.0 * t2 - 10.0 * t4 - 12.0 * x2 * t2;
  const double h = 3.75 + 6.0 * x2 - 4.0 * x4 - 2.0 * t2 - 4.0 * t4 - 8.0 * x2 * t2;
  const double d = akhmediev_peregrine_denominator(x, t);
  return (1.0 + Complex(g, t * h) / d) * std::polar(1.0, t);
}

ComplexField evaluate_field_centered(SolitonKind kind, const Grid1D& grid, double t,
                                     double center) {
  std::vector<Complex> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j) - center;
    values[j] = kind == SolitonKind::Peregrine ? peregrine(x, t) : akhmediev_peregrine(x, t);
  }
  return ComplexField(grid, t, std::move(values));
}

ComplexField evaluate_field(SolitonKind kind, const Grid1D& grid, double t) {
  return evaluate_field_centered(kind, grid, t, 0.0);
}

}  // namespace roguewave
