// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/roguewave.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "roguewave/basis_pursuit.hpp"
#include "roguewave/detection.hpp"
#include "roguewave/error.hpp"
#include "roguewave/haar.hpp"
#include "roguewave/io.hpp"
#include "roguewave/nlse.hpp"
#include "roguewave/recovery.hpp"
#include "roguewave/sensing.hpp"
#include "roguewave/soliton.hpp"

namespace rw = roguewave;

struct rw_field {
  rw::ComplexField value;
};
struct rw_plan {
  rw::SensingPlan value;
};
struct rw_measurements {
  rw::Measurements value;
};
struct rw_scaleogram {
  rw::Scaleogram value;
  std::vector<double> xs;
};
struct rw_recovery {
  rw::RecoveryResult value;
};

namespace {

thread_local std::string g_last_error;

rw_status to_status(rw::ErrorCode code) {
  switch (code) {
    case rw::ErrorCode::InvalidArgument: return RW_ERR_INVALID_ARGUMENT;
    case rw::ErrorCode::LengthNotPowerOfTwo: return RW_ERR_LENGTH_NOT_POWER_OF_TWO;
    case rw::ErrorCode::ScaleOutOfRange: return RW_ERR_SCALE_OUT_OF_RANGE;
    case rw::ErrorCode::MTooLarge: return RW_ERR_M_TOO_LARGE;
    case rw::ErrorCode::PlanMismatch: return RW_ERR_PLAN_MISMATCH;
    case rw::ErrorCode::GridMismatch: return RW_ERR_GRID_MISMATCH;
    case rw::ErrorCode::ZeroReference: return RW_ERR_ZERO_REFERENCE;
    case rw::ErrorCode::DegenerateSpectrum: return RW_ERR_DEGENERATE_SPECTRUM;
    case rw::ErrorCode::StepTooLarge: return RW_ERR_STEP_TOO_LARGE;
    case rw::ErrorCode::NonFiniteValue: return RW_ERR_NON_FINITE_VALUE;
    case rw::ErrorCode::NotConverged: return RW_ERR_NOT_CONVERGED;
    case rw::ErrorCode::Io: return RW_ERR_IO;
    case rw::ErrorCode::Parse: return RW_ERR_PARSE;
  }
  return RW_ERR_INTERNAL;
}

rw_status fail(rw_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class Fn>
rw_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const rw::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RW_ERR_INTERNAL, "unknown error");
  }
}

#define RW_REQUIRE(cond, what) \
  do {                         \
    if (!(cond)) return fail(RW_ERR_INVALID_ARGUMENT, what); \
  } while (0)

rw::SolitonKind to_kind(rw_soliton kind) {
  if (kind == RW_PEREGRINE) return rw::SolitonKind::Peregrine;
  if (kind == RW_AKHMEDIEV_PEREGRINE) return rw::SolitonKind::AkhmedievPeregrine;
  throw rw::Error(rw::ErrorCode::InvalidArgument, "unknown soliton kind");
}

rw::BpConfig to_cpp(const rw_bp_config* cfg) {
  rw::BpConfig out;
  if (cfg) {
    out.feasibility_tol = cfg->feasibility_tol;
    out.max_iterations = cfg->max_iterations;
    out.relative_threshold = cfg->relative_threshold;
  }
  return out;
}

rw::DetectionConfig to_cpp(const rw_detection_config* cfg) {
  rw::DetectionConfig out = rw::default_detection_config();
  if (cfg) {
    out.support_fraction = cfg->support_fraction;
    out.apex_scales = cfg->apex_scales;
    out.ridge_fraction = cfg->ridge_fraction;
    out.threshold = cfg->threshold;
    out.max_scale = cfg->max_scale;
    out.flat_tolerance = cfg->flat_tolerance;
  }
  return out;
}

rw_detection_report to_c(const rw::DetectionReport& r) {
  return rw_detection_report{r.time,  r.triangularity,  r.apex_x, r.apex_confidence,
                             r.alarm ? 1 : 0, r.threshold_used, r.degenerate ? 1 : 0};
}

template <class Save>
rw_status save_to(const char* path, Save&& save) {
  RW_REQUIRE(path, "path is NULL");
  return guarded([&] {
    save(std::filesystem::path(path));
    return RW_OK;
  });
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rw::Error(rw::ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw rw::Error(rw::ErrorCode::Io, "write to '" + path.string() + "' failed");
}

}  // namespace

extern "C" {

const char* rw_version(void) { return "1.0.0"; }

const char* rw_status_name(rw_status status) {
  switch (status) {
    case RW_OK: return "OK";
    case RW_ERR_INTERNAL: return "Internal";
    default: break;
  }
  for (int c = 0; c <= static_cast<int>(rw::ErrorCode::Parse); ++c) {
    if (to_status(static_cast<rw::ErrorCode>(c)) == status)
      return rw::to_string(static_cast<rw::ErrorCode>(c));
  }
  return "Unknown";
}

const char* rw_last_error(void) { return g_last_error.c_str(); }

rw_status rw_soliton_parse(const char* name, rw_soliton* out) {
  RW_REQUIRE(name && out, "NULL argument");
  return guarded([&] {
    *out = rw::parse_soliton_kind(name) == rw::SolitonKind::Peregrine ? RW_PEREGRINE
                                                                       : RW_AKHMEDIEV_PEREGRINE;
    return RW_OK;
  });
}

rw_status rw_soliton_value(rw_soliton kind, double x, double t, double* re, double* im) {
  RW_REQUIRE(re && im, "NULL argument");
  return guarded([&] {
    const rw::Complex v =
        to_kind(kind) == rw::SolitonKind::Peregrine ? rw::peregrine(x, t) : rw::akhmediev_peregrine(x, t);
    *re = v.real();
    *im = v.imag();
    return RW_OK;
  });
}

rw_status rw_field_evaluate(rw_soliton kind, size_t n, double x_min, double x_max, double t,
                            double center, rw_field** out) {
  RW_REQUIRE(out, "NULL output");
  return guarded([&] {
    rw::Grid1D grid(n, x_min, x_max);
    *out = new rw_field{rw::evaluate_field_centered(to_kind(kind), grid, t, center)};
    return RW_OK;
  });
}

rw_status rw_field_create(size_t n, double x_min, double x_max, double t, const double* re,
                          const double* im, rw_field** out) {
  RW_REQUIRE(out && re && im, "NULL argument");
  return guarded([&] {
    rw::Grid1D grid(n, x_min, x_max);
    std::vector<rw::Complex> values(n);
    for (size_t j = 0; j < n; ++j) values[j] = rw::Complex(re[j], im[j]);
    *out = new rw_field{rw::ComplexField(grid, t, std::move(values))};
    return RW_OK;
  });
}

void rw_field_free(rw_field* field) { delete field; }
size_t rw_field_size(const rw_field* field) { return field ? field->value.size() : 0; }
double rw_field_time(const rw_field* field) { return field ? field->value.time() : 0.0; }

void rw_field_grid(const rw_field* field, size_t* n, double* x_min, double* x_max) {
  if (!field) return;
  const auto& g = field->value.grid();
  if (n) *n = g.size();
  if (x_min) *x_min = g.x_min();
  if (x_max) *x_max = g.x_max();
}

void rw_field_values(const rw_field* field, double* re, double* im) {
  if (!field) return;
  const auto values = field->value.values();
  for (size_t j = 0; j < values.size(); ++j) {
    if (re) re[j] = values[j].real();
    if (im) im[j] = values[j].imag();
  }
}

double rw_field_max_modulus(const rw_field* field) {
  double top = 0.0;
  if (field)
    for (const auto& v : field->value.values()) top = std::max(top, std::abs(v));
  return top;
}

double rw_field_norm(const rw_field* field) { return field ? field->value.discrete_norm() : 0.0; }

rw_status rw_field_propagate(const rw_field* field, double t_target, size_t n_steps, rw_field** out) {
  RW_REQUIRE(field && out, "NULL argument");
  return guarded([&] {
    *out = new rw_field{rw::propagate_nlse(field->value, t_target, n_steps)};
    return RW_OK;
  });
}

rw_status rw_field_save(const rw_field* field, const char* path) {
  RW_REQUIRE(field, "NULL field");
  return save_to(path, [&](const std::filesystem::path& p) { rw::io::save_field(p, field->value); });
}

rw_status rw_field_load(const char* path, rw_field** out) {
  RW_REQUIRE(path && out, "NULL argument");
  return guarded([&] {
    *out = new rw_field{rw::io::load_field(path)};
    return RW_OK;
  });
}

rw_status rw_fields_save_svg(const rw_field* const* fields, const char* const* labels, size_t count,
                             const char* path) {
  RW_REQUIRE(fields && count > 0, "no fields");
  return save_to(path, [&](const std::filesystem::path& p) {
    std::vector<rw::ComplexField> fs;
    std::vector<std::string> ls;
    for (size_t i = 0; i < count; ++i) {
      if (!fields[i]) throw rw::Error(rw::ErrorCode::InvalidArgument, "NULL field in list");
      fs.push_back(fields[i]->value);
      ls.emplace_back(labels && labels[i] ? labels[i] : "");
    }
    std::ostringstream os;
    rw::io::write_field_svg(os, fs, ls);
    write_text(p, os.str());
  });
}

rw_status rw_haar_dwt(const double* signal, size_t n, double* coeffs) {
  RW_REQUIRE(signal && coeffs, "NULL argument");
  return guarded([&] {
    const auto c = rw::haar_dwt(std::span<const double>(signal, n));
    std::copy(c.values.begin(), c.values.end(), coeffs);
    return RW_OK;
  });
}

rw_status rw_haar_idwt(const double* coeffs, size_t n, double* signal) {
  RW_REQUIRE(coeffs && signal, "NULL argument");
  return guarded([&] {
    const auto s = rw::haar_idwt(rw::DwtCoefficients{std::vector<double>(coeffs, coeffs + n)});
    std::copy(s.begin(), s.end(), signal);
    return RW_OK;
  });
}

rw_status rw_haar_cwt(const double* signal, size_t n, const int* scales, size_t n_scales,
                      rw_scaleogram** out) {
  RW_REQUIRE(signal && scales && out, "NULL argument");
  return guarded([&] {
    auto sg = rw::haar_cwt(std::span<const double>(signal, n), std::span<const int>(scales, n_scales));
    std::vector<double> xs(n);
    for (size_t j = 0; j < n; ++j) xs[j] = static_cast<double>(j);
    *out = new rw_scaleogram{std::move(sg), std::move(xs)};
    return RW_OK;
  });
}

rw_status rw_scaleogram_from_field(const rw_field* field, int max_scale, rw_scaleogram** out) {
  RW_REQUIRE(field && out, "NULL argument");
  return guarded([&] {
    *out = new rw_scaleogram{rw::deviation_scaleogram(field->value, max_scale),
                             field->value.grid().coordinates()};
    return RW_OK;
  });
}

void rw_scaleogram_free(rw_scaleogram* sg) { delete sg; }
size_t rw_scaleogram_rows(const rw_scaleogram* sg) { return sg ? sg->value.rows() : 0; }
size_t rw_scaleogram_cols(const rw_scaleogram* sg) { return sg ? sg->value.cols() : 0; }

int rw_scaleogram_scale(const rw_scaleogram* sg, size_t row) {
  return sg && row < sg->value.rows() ? sg->value.scales()[row] : 0;
}

rw_status rw_scaleogram_row(const rw_scaleogram* sg, size_t row, double* out) {
  RW_REQUIRE(sg && out, "NULL argument");
  RW_REQUIRE(row < sg->value.rows(), "row out of range");
  const auto r = sg->value.row(row);
  std::copy(r.begin(), r.end(), out);
  return RW_OK;
}

rw_status rw_scaleogram_save_csv(const rw_scaleogram* sg, const char* path) {
  RW_REQUIRE(sg, "NULL scaleogram");
  return save_to(path, [&](const std::filesystem::path& p) {
    std::ostringstream os;
    rw::io::write_scaleogram(os, sg->value, sg->xs);
    write_text(p, os.str());
  });
}

rw_status rw_scaleogram_save_svg(const rw_scaleogram* sg, const char* path) {
  RW_REQUIRE(sg, "NULL scaleogram");
  return save_to(path, [&](const std::filesystem::path& p) {
    std::ostringstream os;
    rw::io::write_scaleogram_svg(os, sg->value, sg->xs);
    write_text(p, os.str());
  });
}

rw_status rw_plan_make(size_t n, size_t m, uint64_t seed, rw_plan** out) {
  RW_REQUIRE(out, "NULL output");
  return guarded([&] {
    *out = new rw_plan{rw::make_plan(n, m, seed)};
    return RW_OK;
  });
}

rw_status rw_plan_create(size_t n, uint64_t seed, const size_t* indices, size_t m, rw_plan** out) {
  RW_REQUIRE(out && (indices || m == 0), "NULL argument");
  return guarded([&] {
    rw::SensingPlan plan{n, m, seed, std::vector<std::size_t>(indices, indices + m)};
    rw::validate_plan(plan);
    *out = new rw_plan{std::move(plan)};
    return RW_OK;
  });
}

void rw_plan_free(rw_plan* plan) { delete plan; }
size_t rw_plan_n(const rw_plan* plan) { return plan ? plan->value.n : 0; }
size_t rw_plan_m(const rw_plan* plan) { return plan ? plan->value.m : 0; }
uint64_t rw_plan_seed(const rw_plan* plan) { return plan ? plan->value.seed : 0; }

void rw_plan_indices(const rw_plan* plan, size_t* out) {
  if (plan && out) std::copy(plan->value.indices.begin(), plan->value.indices.end(), out);
}

rw_status rw_plan_coherence(const rw_plan* plan, double* out) {
  RW_REQUIRE(plan && out, "NULL argument");
  return guarded([&] {
    *out = rw::coherence(plan->value, plan->value.n);
    return RW_OK;
  });
}

rw_status rw_plan_save(const rw_plan* plan, const char* path) {
  RW_REQUIRE(plan, "NULL plan");
  return save_to(path, [&](const std::filesystem::path& p) { rw::io::save_plan(p, plan->value); });
}

rw_status rw_plan_load(const char* path, rw_plan** out) {
  RW_REQUIRE(path && out, "NULL argument");
  return guarded([&] {
    *out = new rw_plan{rw::io::load_plan(path)};
    return RW_OK;
  });
}

rw_status rw_sample(const rw_field* field, const rw_plan* plan, rw_measurements** out) {
  RW_REQUIRE(field && plan && out, "NULL argument");
  return guarded([&] {
    *out = new rw_measurements{rw::sample(field->value, plan->value)};
    return RW_OK;
  });
}

void rw_measurements_free(rw_measurements* meas) { delete meas; }
size_t rw_measurements_count(const rw_measurements* meas) { return meas ? meas->value.values.size() : 0; }
double rw_measurements_time(const rw_measurements* meas) { return meas ? meas->value.time : 0.0; }

void rw_measurements_values(const rw_measurements* meas, double* re, double* im) {
  if (!meas) return;
  for (size_t k = 0; k < meas->value.values.size(); ++k) {
    if (re) re[k] = meas->value.values[k].real();
    if (im) im[k] = meas->value.values[k].imag();
  }
}

rw_status rw_measurements_plan(const rw_measurements* meas, rw_plan** out) {
  RW_REQUIRE(meas && out, "NULL argument");
  return guarded([&] {
    *out = new rw_plan{meas->value.plan};
    return RW_OK;
  });
}

rw_status rw_measurements_save(const rw_measurements* meas, const char* path) {
  RW_REQUIRE(meas, "NULL measurements");
  return save_to(path, [&](const std::filesystem::path& p) { rw::io::save_measurements(p, meas->value); });
}

rw_status rw_measurements_load(const char* path, rw_measurements** out) {
  RW_REQUIRE(path && out, "NULL argument");
  return guarded([&] {
    *out = new rw_measurements{rw::io::load_measurements(path)};
    return RW_OK;
  });
}

void rw_bp_config_default(rw_bp_config* cfg) {
  if (!cfg) return;
  const rw::BpConfig d;
  *cfg = rw_bp_config{d.feasibility_tol, d.max_iterations, d.relative_threshold};
}

rw_status rw_basis_pursuit(const double* g, size_t m, const rw_plan* plan, const rw_bp_config* cfg,
                           double* coeffs, int* iterations, double* residual) {
  RW_REQUIRE(g && plan && coeffs, "NULL argument");
  return guarded([&] {
    const auto sol = rw::basis_pursuit(std::span<const double>(g, m), plan->value, plan->value.n, to_cpp(cfg));
    std::copy(sol.coefficients.begin(), sol.coefficients.end(), coeffs);
    if (iterations) *iterations = sol.iterations;
    if (residual) *residual = sol.residual;
    if (!sol.converged)
      return fail(RW_ERR_NOT_CONVERGED, "basis pursuit stopped after " + std::to_string(sol.iterations) +
                                            " iterations, residual " + std::to_string(sol.residual));
    return RW_OK;
  });
}

rw_status rw_recover(const rw_measurements* meas, double x_min, double x_max, const rw_bp_config* cfg,
                     rw_recovery** out) {
  RW_REQUIRE(meas && out, "NULL argument");
  return guarded([&] {
    rw::Grid1D grid(meas->value.plan.n, x_min, x_max);
    auto* rec = new rw_recovery{rw::recover(meas->value, grid, to_cpp(cfg))};
    *out = rec;
    if (!rec->value.converged)
      return fail(RW_ERR_NOT_CONVERGED, "recovery stopped after " + std::to_string(rec->value.iterations) +
                                            " iterations, residual " + std::to_string(rec->value.residual));
    return RW_OK;
  });
}

void rw_recovery_free(rw_recovery* rec) { delete rec; }

rw_status rw_recovery_field(const rw_recovery* rec, rw_field** out) {
  RW_REQUIRE(rec && out, "NULL argument");
  return guarded([&] {
    *out = new rw_field{rec->value.field};
    return RW_OK;
  });
}

int rw_recovery_iterations(const rw_recovery* rec) { return rec ? rec->value.iterations : 0; }
double rw_recovery_residual(const rw_recovery* rec) { return rec ? rec->value.residual : 0.0; }
int rw_recovery_converged(const rw_recovery* rec) { return rec && rec->value.converged ? 1 : 0; }

void rw_recovery_coefficients(const rw_recovery* rec, double* re, double* im) {
  if (!rec) return;
  if (re) std::copy(rec->value.real_coefficients.begin(), rec->value.real_coefficients.end(), re);
  if (im) std::copy(rec->value.imag_coefficients.begin(), rec->value.imag_coefficients.end(), im);
}

void rw_detection_config_default(rw_detection_config* cfg) {
  if (!cfg) return;
  const auto d = rw::default_detection_config();
  *cfg = rw_detection_config{d.support_fraction, d.apex_scales, d.ridge_fraction,
                             d.threshold,        d.max_scale,   d.flat_tolerance};
}

rw_status rw_triangularity(const rw_scaleogram* sg, double support_fraction, double* out) {
  RW_REQUIRE(sg && out, "NULL argument");
  return guarded([&] {
    const double dx = sg->xs.size() > 1 ? sg->xs[1] - sg->xs[0] : 1.0;
    *out = rw::triangularity_score(sg->value, dx, support_fraction);
    return RW_OK;
  });
}

rw_status rw_locate_apex(const rw_scaleogram* sg, const rw_detection_config* cfg, double* apex_x,
                         double* confidence) {
  RW_REQUIRE(sg && apex_x && confidence, "NULL argument");
  return guarded([&] {
    const std::size_t n = sg->xs.size();
    const double dx = n > 1 ? sg->xs[1] - sg->xs[0] : 1.0;
    rw::Grid1D grid(n, sg->xs.front(), sg->xs.front() + dx * static_cast<double>(n));
    const auto apex = rw::locate_apex(sg->value, grid, to_cpp(cfg));
    *apex_x = apex.x;
    *confidence = apex.confidence;
    return RW_OK;
  });
}

rw_status rw_detect(const rw_field* field, const rw_detection_config* cfg, rw_detection_report* out) {
  RW_REQUIRE(field && out, "NULL argument");
  return guarded([&] {
    *out = to_c(rw::detect(field->value, to_cpp(cfg)));
    return RW_OK;
  });
}

rw_status rw_normalized_rms(const rw_field* a, const rw_field* reference, double* out) {
  RW_REQUIRE(a && reference && out, "NULL argument");
  return guarded([&] {
    *out = rw::normalized_rms(a->value, reference->value);
    return RW_OK;
  });
}

rw_status rw_report_append(const char* path, const rw_detection_report* report, const char* comment) {
  RW_REQUIRE(path && report, "NULL argument");
  return guarded([&] {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw rw::Error(rw::ErrorCode::Io, std::string("cannot open '") + path + "' for appending");
    if (fresh) rw::io::write_report_header(out);
    if (comment) out << "# " << comment << '\n';
    rw::DetectionReport r;
    r.time = report->time;
    r.triangularity = report->triangularity;
    r.apex_x = report->apex_x;
    r.apex_confidence = report->apex_confidence;
    r.alarm = report->alarm != 0;
    rw::io::write_report_row(out, r);
    out.flush();
    if (!out) throw rw::Error(rw::ErrorCode::Io, std::string("write to '") + path + "' failed");
    return RW_OK;
  });
}

size_t rw_format_double(double v, char* buf, size_t cap) {
  const std::string s = rw::io::format_double(v);
  if (!buf || cap <= s.size()) return 0;
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = '\0';
  return s.size();
}

}  // extern "C"
