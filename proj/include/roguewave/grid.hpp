// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace roguewave {

using Complex = std::complex<double>;

bool is_power_of_two(std::size_t n) noexcept;

/// Uniform periodic grid: x_j = x_min + j*dx, j in [0, n), x_max excluded.
class Grid1D {
 public:
  /// Throws InvalidArgument unless n is a power of two >= 2 and x_max > x_min.
  Grid1D(std::size_t n_points, double x_min, double x_max);

  std::size_t size() const noexcept { return n_; }
  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  double extent() const noexcept { return x_max_ - x_min_; }
  double dx() const noexcept { return (x_max_ - x_min_) / static_cast<double>(n_); }
  double x(std::size_t j) const noexcept { return x_min_ + static_cast<double>(j) * dx(); }
  std::vector<double> coordinates() const;

  /// Default analysis grid: 1024 points on [-20, 20).
  static Grid1D standard() { return Grid1D(1024, -20.0, 20.0); }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  std::size_t n_;
  double x_min_;
  double x_max_;
};

/// Complex envelope psi sampled on a grid at one instant.
class ComplexField {
 public:
  /// Throws InvalidArgument on a length mismatch, NonFiniteValue on NaN/Inf.
  ComplexField(Grid1D grid, double time, std::vector<Complex> values);

  const Grid1D& grid() const noexcept { return grid_; }
  double time() const noexcept { return time_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t j) const noexcept { return values_[j]; }

  std::vector<double> real_part() const;
  std::vector<double> imag_part() const;
  std::vector<double> modulus() const;
  /// |psi| - 1, the deviation from the unit background.
  std::vector<double> envelope_deviation() const;

  /// Sum |psi_j|^2 dx.
  double discrete_norm() const;

 private:
  Grid1D grid_;
  double time_;
  std::vector<Complex> values_;
};

}  // namespace roguewave
