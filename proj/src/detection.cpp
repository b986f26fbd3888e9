// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "roguewave/error.hpp"

namespace roguewave {
namespace {

void require_nondegenerate(const Scaleogram& sg) {
  if (!(sg.max_magnitude() > 0.0))
    throw Error(ErrorCode::DegenerateSpectrum, "scaleogram is identically zero");
}

double pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa <= 0.0 || sbb <= 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

struct CircularMean {
  double position;  // in [0, period)
  double resultant; // mean resultant length R in [0, 1]
};

CircularMean circular_mean(std::span<const double> positions, std::span<const double> weights,
                           double period) {
  double c = 0.0, s = 0.0, w = 0.0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * positions[i] / period;
    c += weights[i] * std::cos(angle);
    s += weights[i] * std::sin(angle);
    w += weights[i];
  }
  double angle = std::atan2(s, c);
  if (angle < 0.0) angle += 2.0 * std::numbers::pi;
  return {angle * period / (2.0 * std::numbers::pi), std::hypot(c, s) / w};
}

}  // namespace

DetectionConfig default_detection_config() { return DetectionConfig{}; }

std::vector<double> support_widths(const Scaleogram& sg, double dx, double support_fraction) {
  std::vector<double> widths(sg.rows(), 0.0);
  for (std::size_t r = 0; r < sg.rows(); ++r) {
    const auto row = sg.row(r);
    const double peak = *std::max_element(row.begin(), row.end());
    if (peak <= 0.0) continue;
    const auto count = std::count_if(row.begin(), row.end(),
                                     [&](double v) { return v >= support_fraction * peak; });
    widths[r] = static_cast<double>(count) * dx;
  }
  return widths;
}

double triangularity_score(const Scaleogram& sg, double dx, double support_fraction) {
  require_nondegenerate(sg);
  const std::vector<double> widths = support_widths(sg, dx, support_fraction);
  std::vector<double> scales(sg.rows());
  for (std::size_t r = 0; r < sg.rows(); ++r) scales[r] = sg.scales()[r];
  const double r = pearson(scales, widths);
  return r > 0.0 ? r * r : 0.0;
}

Apex locate_apex(const Scaleogram& sg, const Grid1D& grid, const DetectionConfig& cfg) {
  require_nondegenerate(sg);
  if (sg.cols() != grid.size())
    throw Error(ErrorCode::GridMismatch, "scaleogram width differs from the grid size");

  std::vector<std::size_t> order(sg.rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sg.scales()[a] < sg.scales()[b]; });
  const std::size_t used = std::min<std::size_t>(order.size(), static_cast<std::size_t>(std::max(cfg.apex_scales, 1)));

  const auto period = static_cast<double>(grid.size());
  std::vector<double> peaks, peak_weights;
  for (std::size_t i = 0; i < used; ++i) {
    const auto row = sg.row(order[i]);
    const double top = *std::max_element(row.begin(), row.end());
    if (top <= 0.0) continue;
    // The odd Haar wavelet answers a symmetric bump with two equal lobes, so
    // the per-scale peak is the centroid of the near-maximal ridge rather than
    // a single argmax.
    std::vector<double> pos, w;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] >= cfg.ridge_fraction * top) {
        pos.push_back(static_cast<double>(j));
        w.push_back(row[j]);
      }
    }
    peaks.push_back(circular_mean(pos, w, period).position);
    peak_weights.push_back(top);
  }

  const CircularMean apex = circular_mean(peaks, peak_weights, period);
  const double spread_samples =
      apex.resultant >= 1.0 ? 0.0
                            : period / (2.0 * std::numbers::pi) * std::sqrt(-2.0 * std::log(apex.resultant));
  const double confidence = std::clamp(1.0 - spread_samples / period, 0.0, 1.0);
  return Apex{grid.x_min() + apex.position * grid.dx(), confidence};
}

Scaleogram deviation_scaleogram(const ComplexField& field, int max_scale) {
  const int top = std::min<int>(max_scale, static_cast<int>(field.size() / 2));
  const std::vector<double> deviation = field.envelope_deviation();
  const std::vector<int> scales = scale_range(top);
  return haar_cwt(deviation, scales);
}

DetectionReport detect(const ComplexField& field, const DetectionConfig& cfg) {
  if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0))
    throw Error(ErrorCode::InvalidArgument, "detection threshold must lie in (0, 1)");

  DetectionReport report;
  report.time = field.time();
  report.threshold_used = cfg.threshold;

  const std::vector<double> deviation = field.envelope_deviation();
  double largest = 0.0;
  for (double d : deviation) largest = std::max(largest, std::abs(d));
  if (largest <= cfg.flat_tolerance) {
    report.degenerate = true;
    report.apex_x = 0.5 * (field.grid().x_min() + field.grid().x_max());
    return report;
  }

  const Scaleogram sg = deviation_scaleogram(field, cfg.max_scale);
  report.triangularity = triangularity_score(sg, field.grid().dx(), cfg.support_fraction);
  const Apex apex = locate_apex(sg, field.grid(), cfg);
  report.apex_x = apex.x;
  report.apex_confidence = apex.confidence;
  report.alarm = report.triangularity >= cfg.threshold;
  return report;
}

DetectionReport detect(const ComplexField& field, double threshold) {
  DetectionConfig cfg = default_detection_config();
  cfg.threshold = threshold;
  return detect(field, cfg);
}

double normalized_rms(const ComplexField& a, const ComplexField& b) {
  if (!(a.grid() == b.grid())) throw Error(ErrorCode::GridMismatch, "fields live on different grids");
  if (a.time() != b.time()) throw Error(ErrorCode::GridMismatch, "fields are at different times");
  double diff = 0.0, ref = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    diff += std::norm(a[j] - b[j]);
    ref += std::norm(b[j]);
  }
  if (ref == 0.0) throw Error(ErrorCode::ZeroReference, "reference field has zero norm");
  return std::sqrt(diff / ref);
}

}  // namespace roguewave
