// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <span>

#include "roguewave/grid.hpp"
#include "roguewave/haar.hpp"

namespace roguewave {

/// Tunables of the V-shape detector. Defaults come from config/detection.conf,
/// produced by the calibrate tool.
struct DetectionConfig {
  double support_fraction = 0.1;  // support cut relative to the row maximum
  int apex_scales = 8;            // smallest scales used to place the apex
  double ridge_fraction = 0.5;    // ridge cut for the per-scale peak location
  double threshold = 0.45614139050542202;  // alarm when triangularity >= threshold
  int max_scale = 32;
  /// |psi| - 1 below this everywhere is treated as a flat background.
  double flat_tolerance = 1e-12;
};

DetectionConfig default_detection_config();

struct DetectionReport {
  double time = 0.0;
  double triangularity = 0.0;
  double apex_x = 0.0;
  double apex_confidence = 0.0;
  bool alarm = false;
  double threshold_used = 0.0;
  bool degenerate = false;
};

/// Squared (clipped at zero) Pearson correlation between the scale a and the
/// support width w(a) = dx * #{positions >= support_fraction * row max}.
/// Throws DegenerateSpectrum when the scaleogram is identically zero.
double triangularity_score(const Scaleogram& sg, double dx, double support_fraction = 0.1);

/// Support width per scale, as used by triangularity_score.
std::vector<double> support_widths(const Scaleogram& sg, double dx, double support_fraction = 0.1);

struct Apex {
  double x = 0.0;
  double confidence = 0.0;
};

/// Emergence point from the smallest `cfg.apex_scales` scales. Throws
/// DegenerateSpectrum.
Apex locate_apex(const Scaleogram& sg, const Grid1D& grid, const DetectionConfig& cfg = {});

/// Scaleogram of |psi| - 1 over scales 1..cfg.max_scale.
Scaleogram deviation_scaleogram(const ComplexField& field, int max_scale = 32);

/// Full detector. A flat field is reported as degenerate with score 0 and no
/// alarm instead of throwing. Throws InvalidArgument unless 0 < threshold < 1.
DetectionReport detect(const ComplexField& field, const DetectionConfig& cfg);
DetectionReport detect(const ComplexField& field, double threshold);

/// ||a - b||_2 / ||b||_2 over complex values. Throws GridMismatch or
/// ZeroReference.
double normalized_rms(const ComplexField& a, const ComplexField& b);

}  // namespace roguewave
