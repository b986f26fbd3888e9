// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "roguewave/basis_pursuit.hpp"
#include "roguewave/detection.hpp"
#include "roguewave/error.hpp"
#include "roguewave/grid.hpp"
#include "roguewave/haar.hpp"
#include "roguewave/recovery.hpp"
#include "roguewave/sensing.hpp"
#include "roguewave/soliton.hpp"

using namespace roguewave;

namespace {

using Matrix = std::vector<std::vector<double>>;

// Sensing matrix A[i][k] = (synthesis of coefficient impulse k)[plan[i]],
// built column by column through the inverse transform.
Matrix sensing_matrix(const SensingPlan& plan) {
  Matrix a(plan.m, std::vector<double>(plan.n));
  for (std::size_t k = 0; k < plan.n; ++k) {
    DwtCoefficients e{std::vector<double>(plan.n, 0.0)};
    e.values[k] = 1.0;
    const auto col = haar_idwt(e);
    for (std::size_t i = 0; i < plan.m; ++i) a[i][k] = col[plan.indices[i]];
  }
  return a;
}

// Solves the square system by Gaussian elimination with partial pivoting;
// nullopt when numerically singular.
std::optional<std::vector<double>> solve_square(Matrix m, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    if (std::abs(m[p][c]) < 1e-10) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= m[i][k] * x[k];
    x[i] = acc / m[i][i];
  }
  return x;
}

// Minimum l1 norm over all basic feasible solutions: the l1 problem is a
// linear program, so its optimum is attained at a vertex whose support is a
// set of m linearly independent columns.
double brute_force_l1(const Matrix& a, const std::vector<double>& g) {
  const std::size_t m = a.size(), n = a[0].size();
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
  double best = INFINITY;
  do {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (pick[k]) cols.push_back(k);
    Matrix sub(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sub[i][j] = a[i][cols[j]];
    if (auto x = solve_square(sub, g)) {
      double l1 = 0.0;
      for (double v : *x) l1 += std::abs(v);
      best = std::min(best, l1);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

double l1_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double l2_norm(const std::vector<double>& v) { return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0)); }

SensingPlan full_plan(std::size_t n) { return make_plan(n, n, 0); }

}  // namespace

TEST_SUITE("sensing plan") {
  TEST_CASE("exhaustive and deterministic") {
    const auto p = make_plan(8, 8, 123);
    CHECK(p.indices == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
    const auto a = make_plan(1024, 64, 5), b = make_plan(1024, 64, 5);
    CHECK(a.indices == b.indices);
    CHECK(a.indices != make_plan(1024, 64, 6).indices);
    CHECK(std::is_sorted(a.indices.begin(), a.indices.end()));
    CHECK(std::adjacent_find(a.indices.begin(), a.indices.end()) == a.indices.end());
    CHECK_NOTHROW(validate_plan(a));
  }

  TEST_CASE("argument errors") {
    try {
      make_plan(16, 17, 0);
      FAIL("expected MTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MTooLarge);
    }
    CHECK_THROWS_AS(make_plan(16, 0, 0), Error);
  }

  TEST_CASE("uniform selection frequency over 1000 seeds") {
    const std::size_t n = 1024, m = 64, seeds = 1000;
    std::vector<int> hits(n, 0);
    for (std::uint64_t s = 0; s < seeds; ++s)
      for (auto i : make_plan(n, m, s).indices) ++hits[i];
    const double p = static_cast<double>(m) / n;
    const double mean = seeds * p;
    const double sigma = std::sqrt(seeds * p * (1.0 - p));
    std::size_t outside = 0;
    for (int h : hits)
      if (std::abs(h - mean) > 3.0 * sigma) ++outside;
    // Each index independently lands outside +-3 sigma with probability about
    // 0.27%, i.e. about 2.8 of 1024 indices; 10 would be a 4-sigma excess.
    CHECK(outside <= 10);
    const double total = std::accumulate(hits.begin(), hits.end(), 0.0);
    CHECK(total == static_cast<double>(seeds * m));
  }

  TEST_CASE("sampling gathers exactly") {
    const auto f = evaluate_field(SolitonKind::AkhmedievPeregrine, Grid1D::standard(), 1.5);
    const auto plan = make_plan(1024, 100, 77);
    const auto meas = sample(f, plan);
    REQUIRE(meas.values.size() == 100);
    CHECK(meas.time == 1.5);
    for (std::size_t k = 0; k < 100; ++k) CHECK(meas.values[k] == f[plan.indices[k]]);

    const SensingPlan single{1024, 1, 0, {300}};
    CHECK(sample(f, single).values.front() == f[300]);
    CHECK_THROWS_AS(sample(f, make_plan(512, 10, 0)), Error);
  }

  TEST_CASE("coherence") {
    CHECK(coherence(full_plan(2), 2) == doctest::Approx(1.0).epsilon(1e-15));

    // Brute force: largest |entry| of the explicit Haar basis in the sampled rows.
    const std::size_t n = 1024;
    const auto plan = make_plan(n, 64, 3);
    SensingPlan with_zero = plan;
    if (with_zero.indices.front() != 0) {
      with_zero.indices.front() = 0;
      std::sort(with_zero.indices.begin(), with_zero.indices.end());
    }
    const Matrix a = sensing_matrix(with_zero);
    double worst = 0.0;
    for (const auto& row : a)
      for (double v : row) worst = std::max(worst, std::abs(v));
    CHECK(coherence(with_zero, n) == doctest::Approx(std::sqrt(double(n)) * worst).epsilon(1e-12));

    SensingPlan reversed = plan;
    std::reverse(reversed.indices.begin(), reversed.indices.end());
    CHECK(coherence(reversed, n) == coherence(plan, n));
  }
}

TEST_SUITE("basis pursuit") {
  TEST_CASE("matches brute-force vertex enumeration on small problems") {
    const std::size_t n = 16, m = 6;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto plan = make_plan(n, m, seed);
      std::mt19937_64 rng(seed + 100);
      std::normal_distribution<double> gauss;
      std::vector<double> g(m);
      for (auto& v : g) v = gauss(rng);

      const auto sol = basis_pursuit(g, plan, n);
      CHECK(sol.converged);
      const auto back = apply_sensing_operator(sol.coefficients, plan);
      for (std::size_t i = 0; i < m; ++i) CHECK(std::abs(back[i] - g[i]) < 1e-9);
      const double oracle = brute_force_l1(sensing_matrix(plan), g);
      CHECK(l1_norm(sol.coefficients) == doctest::Approx(oracle).epsilon(1e-8));
    }
  }

  TEST_CASE("full plan returns the transform of the signal") {
    const std::size_t n = 64;
    std::mt19937_64 rng(4);
    std::normal_distribution<double> gauss;
    std::vector<double> s(n);
    for (auto& v : s) v = gauss(rng);
    const auto sol = basis_pursuit(s, full_plan(n), n);
    const auto expect = haar_dwt(s).values;
    CHECK(sol.converged);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(sol.coefficients[k] - expect[k]) < 1e-10);
  }

  TEST_CASE("zero data gives zero coefficients") {
    const auto plan = make_plan(128, 20, 1);
    const auto sol = basis_pursuit(std::vector<double>(20, 0.0), plan, 128);
    CHECK(sol.converged);
    CHECK(l1_norm(sol.coefficients) == 0.0);
  }

  TEST_CASE("coarse planted support is recovered exactly") {
    // Three nonzeros among the eight coarsest coefficients of N=256: the
    // synthesized signal is piecewise constant on blocks of 32 samples, so a
    // few samples per block determine it.
    const std::size_t n = 256;
    std::vector<double> truth(n, 0.0);
    truth[0] = 1.0;
    truth[2] = -0.5;
    truth[5] = 0.75;
    const auto signal = haar_idwt(DwtCoefficients{truth});
    const auto plan = make_plan(n, 64, 9);
    std::vector<double> g(plan.m);
    for (std::size_t i = 0; i < plan.m; ++i) g[i] = signal[plan.indices[i]];
    const auto sol = basis_pursuit(g, plan, n);
    std::vector<double> diff(n);
    for (std::size_t k = 0; k < n; ++k) diff[k] = sol.coefficients[k] - truth[k];
    CHECK(l2_norm(diff) / l2_norm(truth) < 1e-6);
  }

  TEST_CASE("iteration budget exhaustion is reported, not thrown") {
    const auto plan = make_plan(256, 40, 2);
    std::vector<double> g(40);
    std::iota(g.begin(), g.end(), 1.0);
    BpConfig cfg;
    cfg.max_iterations = 3;
    BpSolution sol;
    CHECK_NOTHROW(sol = basis_pursuit(g, plan, 256, cfg));
    CHECK_FALSE(sol.converged);
    CHECK(sol.iterations <= 3);
  }

  TEST_CASE("configuration and shape validation") {
    BpConfig bad;
    bad.feasibility_tol = 0.0;
    CHECK_THROWS_AS(validate(bad), Error);
    bad = BpConfig{};
    bad.max_iterations = 0;
    CHECK_THROWS_AS(validate(bad), Error);
    const auto plan = make_plan(32, 8, 0);
    CHECK_THROWS_AS(basis_pursuit(std::vector<double>(7, 0.0), plan, 32), Error);
  }
}

TEST_SUITE("recovery") {
  TEST_CASE("full sampling reproduces the field") {
    const Grid1D g = Grid1D::standard();
    const auto f = evaluate_field(SolitonKind::Peregrine, g, 0.7);
    const auto r = recover(sample(f, full_plan(g.size())), g);
    CHECK(r.converged);
    CHECK(normalized_rms(r.field, f) <= 1e-10);
    CHECK(r.field.time() == 0.7);
  }

  TEST_CASE("deterministic to the bit") {
    const Grid1D g(256, -20.0, 20.0);
    const auto f = evaluate_field(SolitonKind::AkhmedievPeregrine, g, 0.0);
    const auto meas = sample(f, make_plan(256, 40, 8));
    const auto a = recover(meas, g), b = recover(meas, g);
    CHECK(a.real_coefficients == b.real_coefficients);
    CHECK(a.imag_coefficients == b.imag_coefficients);
    CHECK(a.iterations == b.iterations);
    CHECK(a.residual == b.residual);
  }

  TEST_CASE("a real field leaves the imaginary channel empty") {
    const Grid1D g(256, -20.0, 20.0);
    const auto f = evaluate_field(SolitonKind::Peregrine, g, 0.0);  // real at t = 0
    const auto r = recover(sample(f, make_plan(256, 48, 4)), g);
    const BpConfig cfg;
    double worst = 0.0;
    for (double v : r.imag_coefficients) worst = std::max(worst, std::abs(v));
    CHECK(worst <= cfg.feasibility_tol);
    if (r.converged) CHECK(r.residual <= cfg.feasibility_tol);
  }

  TEST_CASE("grid mismatch") {
    const auto f = evaluate_field(SolitonKind::Peregrine, Grid1D(64, -5.0, 5.0), 0.0);
    CHECK_THROWS_AS(recover(sample(f, make_plan(64, 10, 0)), Grid1D(128, -5.0, 5.0)), Error);
  }
}
