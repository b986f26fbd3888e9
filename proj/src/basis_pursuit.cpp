// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/basis_pursuit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "roguewave/error.hpp"
#include "roguewave/haar.hpp"

namespace roguewave {
namespace {

constexpr int kCheckEvery = 25;
// Certified relative duality gap required to stop.
constexpr double kGapTol = 1e-9;

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double norm1(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double norm_inf(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

/// A = gather(plan) o haar_idwt and its adjoint, with reusable buffers.
class SensingOperator {
 public:
  SensingOperator(const SensingPlan& plan, std::size_t n)
      : plan_(plan), work_(n), scratch_(n) {}

  void apply(std::span<const double> c, std::span<double> out) {
    std::copy(c.begin(), c.end(), work_.begin());
    haar_idwt_inplace(work_, scratch_);
    for (std::size_t k = 0; k < plan_.m; ++k) out[k] = work_[plan_.indices[k]];
  }

  void adjoint(std::span<const double> r, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t k = 0; k < plan_.m; ++k) out[plan_.indices[k]] = r[k];
    haar_dwt_inplace(out, scratch_);
  }

  std::size_t n() const noexcept { return work_.size(); }
  std::size_t m() const noexcept { return plan_.m; }

 private:
  const SensingPlan& plan_;
  std::vector<double> work_;
  std::vector<double> scratch_;
};

struct Candidate {
  std::vector<double> coefficients;
  double residual = 0.0;
  double l1 = 0.0;
};

class Solver {
 public:
  Solver(std::span<const double> g, const SensingPlan& plan, std::size_t n, const BpConfig& cfg)
      : g_(g), op_(plan, n), cfg_(cfg), n_(n), m_(plan.m),
        g_scale_(std::max(1.0, norm2(g))), tmp_m_(plan.m), tmp_n_(n) {}

  BpSolution run() {
    BpSolution out;
    if (norm_inf(g_) == 0.0) {
      out.coefficients.assign(n_, 0.0);
      out.converged = true;
      return out;
    }

    std::vector<double> x(n_), z(n_), u(n_, 0.0), v(n_);
    op_.adjoint(g_, z);  // minimum-norm feasible point
    if (m_ == n_) {
      // A is orthogonal: the feasible set is the single point A^T g.
      out.residual = residual(z);
      out.coefficients = std::move(z);
      out.converged = out.residual <= cfg_.feasibility_tol;
      return out;
    }
    const double tau = cfg_.relative_threshold * norm_inf(z);

    std::optional<Candidate> best;
    for (int it = 1; it <= cfg_.max_iterations; ++it) {
      for (std::size_t i = 0; i < n_; ++i) v[i] = z[i] - u[i];
      project(v, x);
      for (std::size_t i = 0; i < n_; ++i) {
        const double w = x[i] + u[i];
        z[i] = std::copysign(std::max(std::abs(w) - tau, 0.0), w);
        u[i] += x[i] - z[i];
      }

      if (it % kCheckEvery != 0 && it != cfg_.max_iterations) continue;

      double lower = dual_bound(u, tau);
      auto cands = candidates(x, z);
      lower = std::max(lower, support_dual_bound_);
      for (auto& cand : cands) {
        if (cand.residual > cfg_.feasibility_tol) continue;
        const double gap = (cand.l1 - lower) / std::max(cand.l1, 1e-300);
        if (!best || cand.l1 < best->l1) best = cand;
        if (gap <= kGapTol) {
          out.coefficients = std::move(cand.coefficients);
          out.residual = cand.residual;
          out.iterations = it;
          out.converged = true;
          return out;
        }
      }
    }

    out.iterations = cfg_.max_iterations;
    if (best) {
      out.coefficients = std::move(best->coefficients);
      out.residual = best->residual;
    } else {
      project(z, x);
      out.residual = residual(x);
      out.coefficients = std::move(x);
    }
    out.converged = false;
    return out;
  }

 private:
  // out = v - A^T (A v - g)
  void project(std::span<const double> v, std::span<double> out) {
    op_.apply(v, tmp_m_);
    for (std::size_t k = 0; k < m_; ++k) tmp_m_[k] -= g_[k];
    op_.adjoint(tmp_m_, out);
    for (std::size_t i = 0; i < n_; ++i) out[i] = v[i] - out[i];
  }

  double residual(std::span<const double> c) {
    op_.apply(c, tmp_m_);
    double s = 0.0;
    for (std::size_t k = 0; k < m_; ++k) s += (tmp_m_[k] - g_[k]) * (tmp_m_[k] - g_[k]);
    return std::sqrt(s) / g_scale_;
  }

  // Weak-duality lower bound on min ||c||_1 from the ADMM multiplier u / tau:
  // y = A (u / tau), rescaled so that ||A^T y||_inf <= 1, gives g^T y.
  double dual_bound(std::span<const double> u, double tau) {
    for (std::size_t i = 0; i < n_; ++i) tmp_n_[i] = u[i] / tau;
    op_.apply(tmp_n_, tmp_m_);
    std::vector<double> y = tmp_m_;
    op_.adjoint(y, tmp_n_);
    const double scale = std::max(1.0, norm_inf(tmp_n_));
    double gy = 0.0;
    for (std::size_t k = 0; k < m_; ++k) gy += g_[k] * y[k];
    return gy / scale;
  }

  std::vector<Candidate> candidates(std::span<const double> x, std::span<const double> z) {
    std::vector<Candidate> out;
    if (auto polished = polish(z)) out.push_back(std::move(*polished));
    Candidate feasible{std::vector<double>(x.begin(), x.end()), 0.0, 0.0};
    feasible.residual = residual(feasible.coefficients);
    feasible.l1 = norm1(feasible.coefficients);
    out.push_back(std::move(feasible));
    return out;
  }

  // Least squares restricted to the support of z. Exact whenever ADMM has
  // identified the optimal support, which is the common case for sparse data.
  // The result is cached per support, so a settled support costs one solve.
  std::optional<Candidate> polish(std::span<const double> z) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n_; ++i)
      if (z[i] != 0.0) support.push_back(i);
    if (support == polished_support_) return polished_;
    polished_support_ = support;
    polished_.reset();
    support_dual_bound_ = 0.0;
    if (support.empty() || support.size() > m_) return std::nullopt;

    Eigen::MatrixXd a(static_cast<Eigen::Index>(m_), static_cast<Eigen::Index>(support.size()));
    for (std::size_t s = 0; s < support.size(); ++s) {
      std::fill(tmp_n_.begin(), tmp_n_.end(), 0.0);
      tmp_n_[support[s]] = 1.0;
      op_.apply(tmp_n_, tmp_m_);
      for (std::size_t k = 0; k < m_; ++k) a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(s)) = tmp_m_[k];
    }
    const Eigen::Map<const Eigen::VectorXd> rhs(g_.data(), static_cast<Eigen::Index>(m_));
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < static_cast<Eigen::Index>(support.size())) return std::nullopt;
    const Eigen::VectorXd sol = qr.solve(rhs);

    Candidate cand{std::vector<double>(n_, 0.0), 0.0, 0.0};
    for (std::size_t s = 0; s < support.size(); ++s) cand.coefficients[support[s]] = sol(static_cast<Eigen::Index>(s));
    cand.residual = residual(cand.coefficients);
    cand.l1 = norm1(cand.coefficients);
    support_dual_bound_ = support_dual(a, cand.coefficients, support);
    polished_ = cand;
    return cand;
  }

  // Dual point matched to a polished support: the minimum-norm y with
  // A_S^T y = sign(c_S). Any y yields a valid weak-duality bound once
  // rescaled to ||A^T y||_inf <= 1; this one is tight when S is optimal.
  double support_dual(const Eigen::MatrixXd& a, const std::vector<double>& c,
                      const std::vector<std::size_t>& support) {
    Eigen::VectorXd sign(static_cast<Eigen::Index>(support.size()));
    for (std::size_t s = 0; s < support.size(); ++s) {
      const double v = c[support[s]];
      sign(static_cast<Eigen::Index>(s)) = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
    }
    const Eigen::MatrixXd gram = a.transpose() * a;
    const Eigen::VectorXd w = gram.ldlt().solve(sign);
    const Eigen::VectorXd y_vec = a * w;
    if (!y_vec.allFinite()) return 0.0;
    std::vector<double> y(y_vec.data(), y_vec.data() + y_vec.size());
    op_.adjoint(y, tmp_n_);
    const double scale = std::max(1.0, norm_inf(tmp_n_));
    double gy = 0.0;
    for (std::size_t k = 0; k < m_; ++k) gy += g_[k] * y[k];
    return gy / scale;
  }

  std::span<const double> g_;
  SensingOperator op_;
  const BpConfig& cfg_;
  std::size_t n_, m_;
  double g_scale_;
  std::vector<double> tmp_m_, tmp_n_;
  std::vector<std::size_t> polished_support_;
  std::optional<Candidate> polished_;
  double support_dual_bound_ = 0.0;
};

}  // namespace

void validate(const BpConfig& cfg) {
  if (!(cfg.feasibility_tol > 0.0))
    throw Error(ErrorCode::InvalidArgument, "feasibility_tol must be positive");
  if (cfg.max_iterations < 1) throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");
  if (!(cfg.relative_threshold > 0.0))
    throw Error(ErrorCode::InvalidArgument, "relative_threshold must be positive");
}

std::vector<double> apply_sensing_operator(std::span<const double> coefficients,
                                           const SensingPlan& plan) {
  validate_plan(plan);
  if (coefficients.size() != plan.n)
    throw Error(ErrorCode::PlanMismatch, "coefficient length differs from plan n");
  SensingOperator op(plan, plan.n);
  std::vector<double> out(plan.m);
  op.apply(coefficients, out);
  return out;
}

BpSolution basis_pursuit(std::span<const double> g, const SensingPlan& plan, std::size_t n,
                         const BpConfig& cfg) {
  validate(cfg);
  if (plan.n != n) throw Error(ErrorCode::PlanMismatch, "plan n differs from problem size");
  if (g.size() != plan.m)
    throw Error(ErrorCode::PlanMismatch, "expected " + std::to_string(plan.m) +
                                             " measurements, got " + std::to_string(g.size()));
  validate_plan(plan);
  if (!is_power_of_two(n) || n < 2)
    throw Error(ErrorCode::LengthNotPowerOfTwo, "basis pursuit needs a power-of-two length");
  return Solver(g, plan, n, cfg).run();
}

}  // namespace roguewave
