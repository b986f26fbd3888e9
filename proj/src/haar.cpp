// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/haar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "roguewave/error.hpp"
#include "roguewave/grid.hpp"

namespace roguewave {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_power_of_two(std::size_t n) {
  if (n < 2 || !is_power_of_two(n))
    throw Error(ErrorCode::LengthNotPowerOfTwo,
                "Haar transform needs a power-of-two length >= 2, got " + std::to_string(n));
}

// Half-sample symmetric extension: ... s1 s0 | s0 s1 ... s_{n-1} | s_{n-1} s_{n-2} ...
double extended(std::span<const double> s, std::ptrdiff_t j) {
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  const std::ptrdiff_t period = 2 * n;
  j %= period;
  if (j < 0) j += period;
  return j < n ? s[static_cast<std::size_t>(j)] : s[static_cast<std::size_t>(period - 1 - j)];
}

}  // namespace

void haar_dwt_inplace(std::span<double> data, std::span<double> scratch) {
  require_power_of_two(data.size());
  for (std::size_t len = data.size(); len >= 2; len /= 2) {
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < half; ++i) {
      const double a = data[2 * i], b = data[2 * i + 1];
      scratch[i] = (a + b) * kInvSqrt2;
      scratch[half + i] = (a - b) * kInvSqrt2;
    }
    std::copy_n(scratch.begin(), len, data.begin());
  }
}

void haar_idwt_inplace(std::span<double> data, std::span<double> scratch) {
  require_power_of_two(data.size());
  for (std::size_t len = 2; len <= data.size(); len *= 2) {
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < half; ++i) {
      const double a = data[i], d = data[half + i];
      scratch[2 * i] = (a + d) * kInvSqrt2;
      scratch[2 * i + 1] = (a - d) * kInvSqrt2;
    }
    std::copy_n(scratch.begin(), len, data.begin());
  }
}

DwtCoefficients haar_dwt(std::span<const double> signal) {
  require_power_of_two(signal.size());
  DwtCoefficients out{std::vector<double>(signal.begin(), signal.end())};
  std::vector<double> scratch(signal.size());
  haar_dwt_inplace(out.values, scratch);
  return out;
}

std::vector<double> haar_idwt(const DwtCoefficients& coeffs) {
  require_power_of_two(coeffs.size());
  std::vector<double> out = coeffs.values;
  std::vector<double> scratch(out.size());
  haar_idwt_inplace(out, scratch);
  return out;
}

Scaleogram::Scaleogram(std::vector<int> scales, std::size_t positions)
    : scales_(std::move(scales)), cols_(positions), magnitudes_(scales_.size() * positions, 0.0) {}

double Scaleogram::max_magnitude() const noexcept {
  double m = 0.0;
  for (double v : magnitudes_) m = std::max(m, v);
  return m;
}

std::vector<int> scale_range(int max_scale) {
  std::vector<int> scales;
  for (int a = 1; a <= max_scale; ++a) scales.push_back(a);
  return scales;
}

Scaleogram haar_cwt(std::span<const double> signal, std::span<const int> scales) {
  const std::size_t n = signal.size();
  if (n < 2) throw Error(ErrorCode::ScaleOutOfRange, "signal too short for a Haar CWT");
  for (int a : scales) {
    if (a < 1 || static_cast<std::size_t>(a) > n / 2)
      throw Error(ErrorCode::ScaleOutOfRange,
                  "scale " + std::to_string(a) + " outside [1, " + std::to_string(n / 2) + "]");
  }
  Scaleogram sg(std::vector<int>(scales.begin(), scales.end()), n);
  for (std::size_t r = 0; r < scales.size(); ++r) {
    const int a = scales[r];
    const double norm = 1.0 / std::sqrt(2.0 * a);
    auto row = sg.row(r);
    for (std::size_t j = 0; j < n; ++j) {
      const auto jj = static_cast<std::ptrdiff_t>(j);
      double acc = 0.0;
      for (int k = 1; k <= a; ++k) acc += extended(signal, jj - k);
      for (int k = 0; k < a; ++k) acc -= extended(signal, jj + k);
      row[j] = std::abs(acc) * norm;
    }
  }
  return sg;
}

}  // namespace roguewave
