// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/grid.hpp"

#include <cmath>
#include <string>

#include "roguewave/error.hpp"

namespace roguewave {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

Grid1D::Grid1D(std::size_t n_points, double x_min, double x_max)
    : n_(n_points), x_min_(x_min), x_max_(x_max) {
  if (n_points < 2 || !is_power_of_two(n_points))
    throw Error(ErrorCode::LengthNotPowerOfTwo,
                "grid size must be a power of two >= 2, got " + std::to_string(n_points));
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
    throw Error(ErrorCode::InvalidArgument, "grid requires finite x_max > x_min");
}

std::vector<double> Grid1D::coordinates() const {
  std::vector<double> xs(n_);
  for (std::size_t j = 0; j < n_; ++j) xs[j] = x(j);
  return xs;
}

ComplexField::ComplexField(Grid1D grid, double time, std::vector<Complex> values)
    : grid_(grid), time_(time), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw Error(ErrorCode::InvalidArgument,
                "field has " + std::to_string(values_.size()) + " values for a grid of " +
                    std::to_string(grid_.size()));
  if (!std::isfinite(time_)) throw Error(ErrorCode::NonFiniteValue, "field time is not finite");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!std::isfinite(values_[j].real()) || !std::isfinite(values_[j].imag()))
      throw Error(ErrorCode::NonFiniteValue, "non-finite field value at index " + std::to_string(j));
  }
}

std::vector<double> ComplexField::real_part() const {
  std::vector<double> out(values_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = values_[j].real();
  return out;
}

std::vector<double> ComplexField::imag_part() const {
  std::vector<double> out(values_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = values_[j].imag();
  return out;
}

std::vector<double> ComplexField::modulus() const {
  std::vector<double> out(values_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::abs(values_[j]);
  return out;
}

std::vector<double> ComplexField::envelope_deviation() const {
  std::vector<double> out(values_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::abs(values_[j]) - 1.0;
  return out;
}

double ComplexField::discrete_norm() const {
  double sum = 0.0;
  for (const auto& v : values_) sum += std::norm(v);
  return sum * grid_.dx();
}

}  // namespace roguewave
