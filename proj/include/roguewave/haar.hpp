// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace roguewave {

/// Orthonormal Haar coefficients of a length-N signal, N a power of two.
///
/// Layout: values[0] is the approximation coefficient; then the detail levels
/// from coarse to fine, so level l (0 = coarsest) occupies [2^l, 2^(l+1)).
struct DwtCoefficients {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// Full-depth orthonormal Haar analysis. Throws LengthNotPowerOfTwo.
DwtCoefficients haar_dwt(std::span<const double> signal);

/// Exact inverse of haar_dwt. Throws LengthNotPowerOfTwo.
std::vector<double> haar_idwt(const DwtCoefficients& coeffs);

/// In-place variants working on a caller-owned buffer; `scratch` must have the
/// same length. Used by the basis-pursuit inner loop.
void haar_dwt_inplace(std::span<double> data, std::span<double> scratch);
void haar_idwt_inplace(std::span<double> data, std::span<double> scratch);

/// |Haar CWT| magnitudes, one row per scale, one column per signal position.
class Scaleogram {
 public:
  Scaleogram(std::vector<int> scales, std::size_t positions);

  const std::vector<int>& scales() const noexcept { return scales_; }
  std::size_t rows() const noexcept { return scales_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t row, std::size_t col) const noexcept {
    return magnitudes_[row * cols_ + col];
  }
  double& operator()(std::size_t row, std::size_t col) noexcept {
    return magnitudes_[row * cols_ + col];
  }
  std::span<const double> row(std::size_t r) const noexcept {
    return {magnitudes_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) noexcept { return {magnitudes_.data() + r * cols_, cols_}; }

  double max_magnitude() const noexcept;

 private:
  std::vector<int> scales_;
  std::size_t cols_;
  std::vector<double> magnitudes_;
};

/// Scales 1..max_scale.
std::vector<int> scale_range(int max_scale = 32);

/// For scale a and position j the coefficient is
///   (sum_{k=1..a} s[j-k] - sum_{k=0..a-1} s[j+k]) / sqrt(2a),
/// i.e. the dilated Haar mother wavelet (+1 on the a samples left of j, -1 on
/// the a samples from j on), with half-sample symmetric extension at both ends.
/// Throws ScaleOutOfRange unless 1 <= a <= N/2 for every scale.
Scaleogram haar_cwt(std::span<const double> signal, std::span<const int> scales);

}  // namespace roguewave
