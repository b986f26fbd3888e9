// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "roguewave/error.hpp"
#include "roguewave/grid.hpp"
#include "roguewave/haar.hpp"
#include "roguewave/soliton.hpp"

using namespace roguewave;

namespace {

using Matrix = std::vector<std::vector<double>>;

// Rows are the orthonormal Haar basis vectors: the constant, then the
// wavelets from the coarsest level to the finest, left to right.
Matrix haar_matrix(std::size_t n) {
  Matrix h;
  h.emplace_back(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (std::size_t len = n; len >= 2; len /= 2) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(len));
    for (std::size_t start = 0; start < n; start += len) {
      std::vector<double> row(n, 0.0);
      for (std::size_t i = 0; i < len / 2; ++i) row[start + i] = amp;
      for (std::size_t i = len / 2; i < len; ++i) row[start + i] = -amp;
      h.push_back(std::move(row));
    }
  }
  return h;
}

std::vector<double> random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> s(n);
  for (auto& v : s) v = g(rng);
  return s;
}

double sum_sq(const std::vector<double>& v) {
  return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

// Brute-force Haar CWT magnitude: +1 on the a samples left of j, -1 on the
// a samples from j on, mirrored (half-sample) at both ends.
double cwt_oracle(const std::vector<double>& s, int a, std::ptrdiff_t j) {
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  auto at = [&](std::ptrdiff_t i) {
    while (i < 0 || i >= n) i = i < 0 ? -i - 1 : 2 * n - i - 1;
    return s[static_cast<std::size_t>(i)];
  };
  double acc = 0.0;
  for (int k = 1; k <= a; ++k) acc += at(j - k);
  for (int k = 0; k < a; ++k) acc -= at(j + k);
  return std::abs(acc) / std::sqrt(2.0 * a);
}

}  // namespace

TEST_SUITE("haar dwt") {
  TEST_CASE("small exact cases") {
    const std::vector<double> pair{1.0, -1.0};
    const auto c = haar_dwt(pair).values;
    CHECK(c[0] == 0.0);
    CHECK(c[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    const std::vector<double> constant(64, 2.5);
    const auto cc = haar_dwt(constant).values;
    CHECK(cc[0] == doctest::Approx(2.5 * 8.0).epsilon(1e-15));
    for (std::size_t k = 1; k < cc.size(); ++k) CHECK(std::abs(cc[k]) < 1e-14);

    DwtCoefficients dc{std::vector<double>(16, 0.0)};
    dc.values[0] = 4.0 * 0.75;
    for (double v : haar_idwt(dc)) CHECK(v == doctest::Approx(0.75).epsilon(1e-15));
  }

  TEST_CASE("dense matrix oracle") {
    for (std::size_t n : {2u, 4u, 8u, 32u, 128u, 256u}) {
      const Matrix h = haar_matrix(n);
      const auto s = random_signal(n, n);
      const auto c = haar_dwt(s).values;
      double worst = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double expect = std::inner_product(h[k].begin(), h[k].end(), s.begin(), 0.0);
        worst = std::max(worst, std::abs(c[k] - expect));
      }
      CHECK(worst < 1e-12);

      // Impulse in coefficient k synthesizes basis vector k.
      for (std::size_t k = 0; k < n; k += std::max<std::size_t>(1, n / 16)) {
        DwtCoefficients e{std::vector<double>(n, 0.0)};
        e.values[k] = 1.0;
        const auto col = haar_idwt(e);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(col[i] - h[k][i]) < 1e-14);
      }
    }
  }

  TEST_CASE("assembled matrix is orthonormal") {
    for (std::size_t n : {2u, 16u, 64u, 256u}) {
      const Matrix h = haar_matrix(n);
      double worst = 0.0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const double dot = std::inner_product(h[a].begin(), h[a].end(), h[b].begin(), 0.0);
          worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
      CHECK(worst < 1e-12);
    }
  }

  TEST_CASE("round trip and Parseval") {
    for (std::size_t n : {8u, 64u, 1024u})
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = random_signal(n, 1000 * n + seed);
        const auto c = haar_dwt(s);
        const auto back = haar_idwt(c);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) err += (back[i] - s[i]) * (back[i] - s[i]);
        CHECK(std::sqrt(err / sum_sq(s)) < 1e-12);
        CHECK(std::abs(sum_sq(c.values) - sum_sq(s)) < 1e-12 * sum_sq(s));
      }
  }

  TEST_CASE("linearity") {
    const auto s = random_signal(512, 1), u = random_signal(512, 2);
    const double a = 1.75, b = -0.3;
    std::vector<double> mix(512);
    for (std::size_t i = 0; i < 512; ++i) mix[i] = a * s[i] + b * u[i];
    const auto cm = haar_dwt(mix).values, cs = haar_dwt(s).values, cu = haar_dwt(u).values;
    for (std::size_t k = 0; k < 512; ++k) CHECK(std::abs(cm[k] - (a * cs[k] + b * cu[k])) < 1e-12);
  }

  TEST_CASE("rejects lengths that are not powers of two") {
    CHECK_THROWS_AS(haar_dwt(std::vector<double>(12, 0.0)), Error);
    CHECK_THROWS_AS(haar_dwt(std::vector<double>(1, 0.0)), Error);
    CHECK_THROWS_AS(haar_idwt(DwtCoefficients{std::vector<double>(6, 0.0)}), Error);
  }

  TEST_CASE("sparsity of the peak deviation") {
    const auto dev = evaluate_field(SolitonKind::Peregrine, Grid1D::standard(), 0.0).envelope_deviation();
    const auto c = haar_dwt(dev).values;
    double peak = 0.0;
    for (double v : c) peak = std::max(peak, std::abs(v));
    const auto big = std::count_if(c.begin(), c.end(), [&](double v) { return std::abs(v) > 1e-3 * peak; });
    CHECK(static_cast<double>(big) / static_cast<double>(c.size()) < 0.10);
  }
}

TEST_SUITE("haar cwt") {
  TEST_CASE("brute-force oracle") {
    const auto s = random_signal(100, 3);  // CWT does not need a power of two
    const auto scales = scale_range(16);
    const auto sg = haar_cwt(s, scales);
    REQUIRE(sg.rows() == 16);
    REQUIRE(sg.cols() == 100);
    double worst = 0.0;
    for (std::size_t r = 0; r < sg.rows(); ++r)
      for (std::size_t j = 0; j < sg.cols(); ++j)
        worst = std::max(worst, std::abs(sg(r, j) - cwt_oracle(s, scales[r], static_cast<std::ptrdiff_t>(j))));
    CHECK(worst < 1e-12);
  }

  TEST_CASE("constant signal gives a zero scaleogram") {
    const auto sg = haar_cwt(std::vector<double>(64, 3.0), scale_range(32));
    CHECK(sg.max_magnitude() == 0.0);
  }

  TEST_CASE("step is located at every scale") {
    std::vector<double> s(128, 0.0);
    std::fill(s.begin() + 50, s.end(), 1.0);
    const auto sg = haar_cwt(s, scale_range(20));
    for (std::size_t r = 0; r < sg.rows(); ++r) {
      const auto row = sg.row(r);
      CHECK(std::max_element(row.begin(), row.end()) - row.begin() == 50);
    }
  }

  TEST_CASE("peak field: column of largest aggregate magnitude is the center") {
    const Grid1D g = Grid1D::standard();
    const auto dev = evaluate_field(SolitonKind::Peregrine, g, 0.0).modulus();
    const auto sg = haar_cwt(dev, scale_range(32));
    std::vector<double> col(sg.cols(), 0.0), oracle(sg.cols(), 0.0);
    for (std::size_t r = 0; r < sg.rows(); ++r)
      for (std::size_t j = 0; j < sg.cols(); ++j) {
        col[j] += sg(r, j);
        oracle[j] += cwt_oracle(dev, static_cast<int>(r) + 1, static_cast<std::ptrdiff_t>(j));
      }
    const auto best = std::max_element(col.begin(), col.end()) - col.begin();
    CHECK(best == std::max_element(oracle.begin(), oracle.end()) - oracle.begin());
    // The zero-mean wavelet straddles the peak, so the centre column is x = 0
    // up to the half-sample offset of an even-length window.
    CHECK(std::abs(g.x(static_cast<std::size_t>(best))) <= g.dx());
  }

  TEST_CASE("translation covariance away from the boundary") {
    const auto s = random_signal(512, 9);
    const int k = 37;
    std::vector<double> shifted(512, 0.0);
    for (std::size_t i = k; i < 512; ++i) shifted[i] = s[i - k];
    const auto a = haar_cwt(s, scale_range(32));
    const auto b = haar_cwt(shifted, scale_range(32));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t j = 32 + k; j + 32 < 512; ++j) CHECK(std::abs(b(r, j) - a(r, j - k)) < 1e-12);
  }

  TEST_CASE("scale bounds") {
    const std::vector<double> s(16, 1.0);
    CHECK_THROWS_AS(haar_cwt(s, std::vector<int>{0}), Error);
    CHECK_THROWS_AS(haar_cwt(s, std::vector<int>{9}), Error);
    CHECK_NOTHROW(haar_cwt(s, std::vector<int>{8}));
  }
}
