// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roguewave/detection.hpp"
#include "roguewave/grid.hpp"
#include "roguewave/haar.hpp"
#include "roguewave/sensing.hpp"

namespace roguewave::io {

/// %.17g, enough digits for an exact double round trip.
std::string format_double(double v);
/// Strict parse of a whole token; throws Parse.
double parse_double(std::string_view token);

// All writers emit LF line endings and '#'-prefixed metadata comments.
//
// Field:        # roguewave field t=<t> n=<n> x_min=<a> x_max=<b>
//               x,re,im,abs
// Plan:         # n=<N> m=<M> seed=<S>
//               index
// Measurements: # roguewave measurements t=<t> n=<N> m=<M> seed=<S>
//               index,re,im
// Scaleogram:   scale\position,<x_0>,...,<x_{N-1}>   then one row per scale
// Report:       t,triangularity,apex_x,apex_confidence,alarm

void write_field(std::ostream& out, const ComplexField& field);
ComplexField read_field(std::istream& in);

void write_plan(std::ostream& out, const SensingPlan& plan);
SensingPlan read_plan(std::istream& in);

void write_measurements(std::ostream& out, const Measurements& meas);
Measurements read_measurements(std::istream& in);

/// `xs` labels the columns (one coordinate per position).
void write_scaleogram(std::ostream& out, const Scaleogram& sg, std::span<const double> xs);

/// Linear gray heat map, min -> white and max -> black, one rect per cell.
void write_scaleogram_svg(std::ostream& out, const Scaleogram& sg, std::span<const double> xs);

/// Line plot of |psi| for one or more fields on a shared axis.
void write_field_svg(std::ostream& out, const std::vector<ComplexField>& fields,
                     const std::vector<std::string>& labels);

void write_report_header(std::ostream& out);
void write_report_row(std::ostream& out, const DetectionReport& report);

// Path helpers wrapping the stream functions; Io errors name the path.
void save_field(const std::filesystem::path& path, const ComplexField& field);
ComplexField load_field(const std::filesystem::path& path);
void save_plan(const std::filesystem::path& path, const SensingPlan& plan);
SensingPlan load_plan(const std::filesystem::path& path);
void save_measurements(const std::filesystem::path& path, const Measurements& meas);
Measurements load_measurements(const std::filesystem::path& path);

}  // namespace roguewave::io
