// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/nlse.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "roguewave/error.hpp"

namespace roguewave {
namespace {

// fftw planning is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};
using PlanPtr = std::unique_ptr<fftw_plan_s, PlanDeleter>;

PlanPtr make_plan(int n, fftw_complex* buf, int sign) {
  std::lock_guard lock(planner_mutex());
  return PlanPtr(fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE));
}

double max_modulus_squared(const std::vector<Complex>& psi) {
  double m = 0.0;
  for (const auto& v : psi) m = std::max(m, std::norm(v));
  return m;
}

void nonlinear_substep(std::vector<Complex>& psi, double h) {
  for (auto& v : psi) v *= std::polar(1.0, std::norm(v) * h);
}

}  // namespace

std::size_t default_nlse_steps(double duration) {
  const double steps = std::ceil(std::abs(duration) * 1000.0);
  return steps < 1.0 ? 1 : static_cast<std::size_t>(steps);
}

ComplexField propagate_nlse(const ComplexField& field, double t_target, std::size_t n_steps,
                            const SplitStepConfig& cfg) {
  if (n_steps == 0) throw Error(ErrorCode::InvalidArgument, "propagate_nlse needs n_steps >= 1");
  if (!std::isfinite(t_target)) throw Error(ErrorCode::InvalidArgument, "t_target is not finite");
  if (t_target == field.time()) return field;

  const Grid1D& grid = field.grid();
  const std::size_t n = grid.size();
  const double dt = (t_target - field.time()) / static_cast<double>(n_steps);

  // Angular wavenumbers in fftw's unshifted order.
  const double dk = 2.0 * std::numbers::pi / grid.extent();
  std::vector<Complex> linear_phase(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double idx = j < n / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n);
    const double k = idx * dk;
    linear_phase[j] = std::polar(1.0 / static_cast<double>(n), -0.5 * k * k * dt);
  }

  std::vector<Complex> psi(field.values().begin(), field.values().end());
  auto* buf = reinterpret_cast<fftw_complex*>(psi.data());
  const PlanPtr forward = make_plan(static_cast<int>(n), buf, FFTW_FORWARD);
  const PlanPtr backward = make_plan(static_cast<int>(n), buf, FFTW_BACKWARD);

  for (std::size_t step = 0; step < n_steps; ++step) {
    const double phase = max_modulus_squared(psi) * std::abs(dt);
    if (!std::isfinite(phase))
      throw Error(ErrorCode::NonFiniteValue, "NLSE solution overflowed at step " + std::to_string(step));
    if (phase > cfg.max_phase_per_step)
      throw Error(ErrorCode::StepTooLarge,
                  "nonlinear phase per step " + std::to_string(phase) + " exceeds bound at step " +
                      std::to_string(step));
    nonlinear_substep(psi, 0.5 * dt);
    fftw_execute_dft(forward.get(), buf, buf);
    for (std::size_t j = 0; j < n; ++j) psi[j] *= linear_phase[j];
    fftw_execute_dft(backward.get(), buf, buf);
    nonlinear_substep(psi, 0.5 * dt);
  }
  return ComplexField(grid, t_target, std::move(psi));
}

}  // namespace roguewave
