// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <istream>
#include <sstream>

#include "roguewave/error.hpp"

namespace roguewave::io {
namespace {

using Metadata = std::map<std::string, std::string, std::less<>>;

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Reads '#' comments into metadata (key=value tokens) and returns the
// remaining non-empty lines with their 1-based line numbers.
struct Document {
  Metadata meta;
  std::vector<std::pair<std::size_t, std::string>> lines;
};

Document read_document(std::istream& in) {
  Document doc;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      for (auto token : split(view.substr(1), ' ')) {
        const auto eq = token.find('=');
        if (eq != std::string_view::npos)
          doc.meta[std::string(token.substr(0, eq))] = std::string(token.substr(eq + 1));
      }
      continue;
    }
    doc.lines.emplace_back(number, std::string(view));
  }
  return doc;
}

double parse_at(std::string_view token, std::size_t line) {
  try {
    return parse_double(token);
  } catch (const Error& e) {
    parse_error(line, e.what());
  }
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  token = trim(token);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    parse_error(line, "invalid index '" + std::string(token) + "'");
  return v;
}

std::optional<std::string> meta_value(const Metadata& meta, std::string_view key) {
  const auto it = meta.find(key);
  if (it == meta.end()) return std::nullopt;
  return it->second;
}

void expect_header(const Document& doc, std::size_t at, std::string_view header) {
  if (doc.lines.size() <= at || doc.lines[at].second != header)
    parse_error(doc.lines.size() > at ? doc.lines[at].first : 0,
                "expected header '" + std::string(header) + "'");
}

std::vector<std::string_view> fields_of(const std::pair<std::size_t, std::string>& line,
                                        std::size_t expected) {
  auto cols = split(line.second, ',');
  if (cols.size() != expected)
    parse_error(line.first, "expected " + std::to_string(expected) + " columns, found " +
                                std::to_string(cols.size()));
  return cols;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for reading");
  return in;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write to '" + path.string() + "' failed");
}

template <class T, class Fn>
T with_path(const std::filesystem::path& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse || e.code() == ErrorCode::InvalidArgument)
      throw Error(e.code(), path.string() + ": " + e.what());
    throw;
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

double parse_double(std::string_view token) {
  token = trim(token);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw Error(ErrorCode::Parse, "invalid number '" + std::string(token) + "'");
  return v;
}

void write_field(std::ostream& out, const ComplexField& field) {
  const Grid1D& g = field.grid();
  out << "# roguewave field t=" << format_double(field.time()) << " n=" << g.size()
      << " x_min=" << format_double(g.x_min()) << " x_max=" << format_double(g.x_max()) << '\n';
  out << "x,re,im,abs\n";
  for (std::size_t j = 0; j < field.size(); ++j) {
    out << format_double(g.x(j)) << ',' << format_double(field[j].real()) << ','
        << format_double(field[j].imag()) << ',' << format_double(std::abs(field[j])) << '\n';
  }
}

ComplexField read_field(std::istream& in) {
  const Document doc = read_document(in);
  expect_header(doc, 0, "x,re,im,abs");
  std::vector<double> xs;
  std::vector<Complex> values;
  for (std::size_t i = 1; i < doc.lines.size(); ++i) {
    const auto cols = fields_of(doc.lines[i], 4);
    const std::size_t ln = doc.lines[i].first;
    xs.push_back(parse_at(cols[0], ln));
    values.emplace_back(parse_at(cols[1], ln), parse_at(cols[2], ln));
    if (!std::isfinite(values.back().real()) || !std::isfinite(values.back().imag()))
      parse_error(ln, "non-finite field value");
  }
  if (xs.size() < 2) parse_error(doc.lines.empty() ? 0 : doc.lines.back().first, "field needs at least two rows");

  const std::size_t n = xs.size();
  double x_min = xs.front();
  double x_max = xs.front() + static_cast<double>(n) * (xs[1] - xs[0]);
  double t = 0.0;
  if (auto v = meta_value(doc.meta, "x_min")) x_min = parse_double(*v);
  if (auto v = meta_value(doc.meta, "x_max")) x_max = parse_double(*v);
  if (auto v = meta_value(doc.meta, "t")) t = parse_double(*v);
  if (auto v = meta_value(doc.meta, "n"); v && parse_index(*v, 0) != n)
    parse_error(doc.lines.back().first, "header says n=" + *v + " but found " + std::to_string(n) + " rows");
  return ComplexField(Grid1D(n, x_min, x_max), t, std::move(values));
}

void write_plan(std::ostream& out, const SensingPlan& plan) {
  out << "# n=" << plan.n << " m=" << plan.m << " seed=" << plan.seed << '\n';
  out << "index\n";
  for (std::size_t j : plan.indices) out << j << '\n';
}

SensingPlan read_plan(std::istream& in) {
  const Document doc = read_document(in);
  expect_header(doc, 0, "index");
  SensingPlan plan;
  for (std::size_t i = 1; i < doc.lines.size(); ++i)
    plan.indices.push_back(parse_index(fields_of(doc.lines[i], 1)[0], doc.lines[i].first));
  const auto n = meta_value(doc.meta, "n");
  if (!n) parse_error(1, "plan is missing the '# n=' header");
  plan.n = parse_index(*n, 1);
  plan.m = plan.indices.size();
  if (auto m = meta_value(doc.meta, "m"); m && parse_index(*m, 1) != plan.m)
    parse_error(1, "header m=" + *m + " disagrees with " + std::to_string(plan.m) + " indices");
  if (auto s = meta_value(doc.meta, "seed")) plan.seed = parse_index(*s, 1);
  validate_plan(plan);
  return plan;
}

void write_measurements(std::ostream& out, const Measurements& meas) {
  out << "# roguewave measurements t=" << format_double(meas.time) << " n=" << meas.plan.n
      << " m=" << meas.plan.m << " seed=" << meas.plan.seed << '\n';
  out << "index,re,im\n";
  for (std::size_t k = 0; k < meas.values.size(); ++k) {
    out << meas.plan.indices[k] << ',' << format_double(meas.values[k].real()) << ','
        << format_double(meas.values[k].imag()) << '\n';
  }
}

Measurements read_measurements(std::istream& in) {
  const Document doc = read_document(in);
  expect_header(doc, 0, "index,re,im");
  Measurements meas;
  for (std::size_t i = 1; i < doc.lines.size(); ++i) {
    const auto cols = fields_of(doc.lines[i], 3);
    const std::size_t ln = doc.lines[i].first;
    meas.plan.indices.push_back(parse_index(cols[0], ln));
    meas.values.emplace_back(parse_at(cols[1], ln), parse_at(cols[2], ln));
  }
  const auto n = meta_value(doc.meta, "n");
  if (!n) parse_error(1, "measurements are missing the 'n=' header");
  meas.plan.n = parse_index(*n, 1);
  meas.plan.m = meas.plan.indices.size();
  if (auto s = meta_value(doc.meta, "seed")) meas.plan.seed = parse_index(*s, 1);
  if (auto t = meta_value(doc.meta, "t")) meas.time = parse_double(*t);
  validate_plan(meas.plan);
  return meas;
}

void write_scaleogram(std::ostream& out, const Scaleogram& sg, std::span<const double> xs) {
  if (xs.size() != sg.cols()) throw Error(ErrorCode::InvalidArgument, "one coordinate per scaleogram column required");
  out << "scale\\position";
  for (std::size_t j = 0; j < sg.cols(); ++j) out << ',' << format_double(xs[j]);
  out << '\n';
  for (std::size_t r = 0; r < sg.rows(); ++r) {
    out << sg.scales()[r];
    for (double v : sg.row(r)) out << ',' << format_double(v);
    out << '\n';
  }
}

void write_scaleogram_svg(std::ostream& out, const Scaleogram& sg, std::span<const double> xs) {
  if (xs.size() != sg.cols() || xs.empty()) throw Error(ErrorCode::InvalidArgument, "one coordinate per scaleogram column required");
  constexpr int kCell = 12;
  const double width = static_cast<double>(sg.cols());
  const double height = static_cast<double>(sg.rows() * kCell);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t r = 0; r < sg.rows(); ++r)
    for (double v : sg.row(r)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  const double span = hi > lo ? hi - lo : 1.0;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height + 40 << "\" viewBox=\"0 0 " << width << ' ' << height + 40
      << "\" shape-rendering=\"crispEdges\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Scale 1 on top, the V opens downward as the scale grows.
  for (std::size_t r = 0; r < sg.rows(); ++r) {
    const auto row = sg.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int gray = static_cast<int>(std::lround(255.0 * (1.0 - (row[j] - lo) / span)));
      if (gray == 255) continue;
      out << "<rect x=\"" << j << "\" y=\"" << r * kCell << "\" width=\"1\" height=\"" << kCell
          << "\" fill=\"rgb(" << gray << ',' << gray << ',' << gray << ")\"/>\n";
    }
  }
  out << "<text x=\"2\" y=\"" << height + 16 << "\" font-size=\"12\">x: "
      << format_double(xs.front()) << " .. " << format_double(xs.back()) << ", scales "
      << (sg.rows() ? sg.scales().front() : 0) << ".." << (sg.rows() ? sg.scales().back() : 0)
      << ", max |W| = " << format_double(hi) << "</text>\n";
  out << "</svg>\n";
}

void write_field_svg(std::ostream& out, const std::vector<ComplexField>& fields,
                     const std::vector<std::string>& labels) {
  constexpr double kW = 800, kH = 400, kPad = 40;
  if (fields.empty()) throw Error(ErrorCode::InvalidArgument, "no fields to plot");
  const Grid1D& grid = fields.front().grid();
  double top = 0.0;
  for (const auto& f : fields)
    for (const auto& v : f.values()) top = std::max(top, std::abs(v));
  top = top > 0.0 ? top : 1.0;
  static const char* colors[] = {"black", "crimson", "steelblue", "darkgreen"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out << "<polyline fill=\"none\" stroke=\"" << colors[i % 4] << "\" stroke-width=\"1\" points=\"";
    const auto& f = fields[i];
    for (std::size_t j = 0; j < f.size(); ++j) {
      const double px = kPad + (kW - 2 * kPad) * (grid.x(j) - grid.x_min()) / grid.extent();
      const double py = kH - kPad - (kH - 2 * kPad) * std::abs(f[j]) / top;
      out << format_double(px) << ',' << format_double(py) << ' ';
    }
    out << "\"/>\n";
    if (i < labels.size())
      out << "<text x=\"" << kPad + 4 << "\" y=\"" << kPad + 14 * (i + 1) << "\" font-size=\"12\" fill=\""
          << colors[i % 4] << "\">" << labels[i] << "</text>\n";
  }
  out << "<text x=\"" << kPad << "\" y=\"" << kH - 10 << "\" font-size=\"12\">|psi| vs x, max "
      << format_double(top) << "</text>\n</svg>\n";
}

void write_report_header(std::ostream& out) { out << "t,triangularity,apex_x,apex_confidence,alarm\n"; }

void write_report_row(std::ostream& out, const DetectionReport& report) {
  out << format_double(report.time) << ',' << format_double(report.triangularity) << ','
      << format_double(report.apex_x) << ',' << format_double(report.apex_confidence) << ','
      << (report.alarm ? 1 : 0) << '\n';
}

void save_field(const std::filesystem::path& path, const ComplexField& field) {
  auto out = open_out(path);
  write_field(out, field);
  finish(out, path);
}

ComplexField load_field(const std::filesystem::path& path) {
  return with_path<ComplexField>(path, [&] {
    auto in = open_in(path);
    return read_field(in);
  });
}

void save_plan(const std::filesystem::path& path, const SensingPlan& plan) {
  auto out = open_out(path);
  write_plan(out, plan);
  finish(out, path);
}

SensingPlan load_plan(const std::filesystem::path& path) {
  return with_path<SensingPlan>(path, [&] {
    auto in = open_in(path);
    return read_plan(in);
  });
}

void save_measurements(const std::filesystem::path& path, const Measurements& meas) {
  auto out = open_out(path);
  write_measurements(out, meas);
  finish(out, path);
}

Measurements load_measurements(const std::filesystem::path& path) {
  return with_path<Measurements>(path, [&] {
    auto in = open_in(path);
    return read_measurements(in);
  });
}

}  // namespace roguewave::io
