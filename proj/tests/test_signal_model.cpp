// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "roguewave/error.hpp"
#include "roguewave/grid.hpp"
#include "roguewave/nlse.hpp"
#include "roguewave/soliton.hpp"

using namespace roguewave;

namespace {

// Relative L2 distance between two fields on the same grid.
double relative_l2(const ComplexField& a, const ComplexField& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    num += std::norm(a[j] - b[j]);
    den += std::norm(b[j]);
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("standard grid spacing and coordinates") {
    const Grid1D g = Grid1D::standard();
    CHECK(g.size() == 1024);
    CHECK(g.dx() == doctest::Approx(40.0 / 1024.0).epsilon(1e-15));
    CHECK(g.x(0) == -20.0);
    CHECK(g.x(512) == 0.0);
    CHECK(g.x(1023) == doctest::Approx(20.0 - g.dx()));
  }

  TEST_CASE("grid rejects bad shapes") {
    CHECK_THROWS_AS(Grid1D(1000, -1.0, 1.0), Error);
    CHECK_THROWS_AS(Grid1D(1, -1.0, 1.0), Error);
    CHECK_THROWS_AS(Grid1D(8, 1.0, 1.0), Error);
    try {
      Grid1D(12, 0.0, 1.0);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::LengthNotPowerOfTwo);
    }
  }

  TEST_CASE("field validates length and finiteness") {
    const Grid1D g(4, 0.0, 1.0);
    CHECK_THROWS_AS(ComplexField(g, 0.0, std::vector<Complex>(3)), Error);
    std::vector<Complex> bad(4, Complex(1.0, 0.0));
    bad[2] = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(ComplexField(g, 0.0, bad), Error);
  }
}

TEST_SUITE("peregrine") {
  TEST_CASE("exact values") {
    CHECK(peregrine(0.0, 0.0) == Complex(-3.0, 0.0));
    CHECK(peregrine(0.5, 0.0) == Complex(-1.0, 0.0));
    CHECK(std::abs(peregrine(0.0, 0.0)) == 3.0);
  }

  TEST_CASE("high-precision oracle at (0, 3)") {
    // 40-digit evaluation of the closed form.
    const Complex expected(-0.7914289782264293718795683, 0.7680210860644948460497926);
    const Complex got = peregrine(0.0, 3.0);
    CHECK(std::abs(got - expected) < 1e-15);
  }

  TEST_CASE("background far from the core") {
    for (double t : {0.0, 3.0})
      for (double x : {-1e3, -100.0, 100.0, 1e3}) CHECK(std::abs(std::abs(peregrine(x, t)) - 1.0) < 1e-3);
    CHECK(std::abs(peregrine(1e8, 0.0) - Complex(1.0, 0.0)) < 1e-12);
  }

  TEST_CASE("modulus is even in x and t") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 10000; ++i) {
      const double x = u(rng), t = u(rng);
      const double m = std::abs(peregrine(x, t));
      CHECK(std::abs(std::abs(peregrine(-x, t)) - m) <= 1e-14 * m);
      CHECK(std::abs(std::abs(peregrine(x, -t)) - m) <= 1e-14 * m);
    }
  }
}

TEST_SUITE("akhmediev-peregrine") {
  TEST_CASE("peak value") {
    CHECK(std::abs(akhmediev_peregrine(0.0, 0.0) - Complex(5.0, 0.0)) < 1e-14);
    CHECK(akhmediev_peregrine_denominator(0.0, 0.0) == doctest::Approx(3.0 / 32.0).epsilon(1e-15));
  }

  TEST_CASE("high-precision oracle at (1, 1)") {
    const Complex expected(-0.4304362858337368645566816, -1.874839774674907691320464);
    CHECK(std::abs(akhmediev_peregrine(1.0, 1.0) - expected) < 1e-14);
    CHECK(akhmediev_peregrine_denominator(1.0, 1.0) == doctest::Approx(12.67708333333333333).epsilon(1e-15));
  }

  TEST_CASE("denominator positive on a dense random sample") {
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    double smallest = INFINITY;
    for (int i = 0; i < 1000000; ++i) smallest = std::min(smallest, akhmediev_peregrine_denominator(u(rng), u(rng)));
    CHECK(smallest > 0.0);
  }

  TEST_CASE("background and symmetry") {
    for (double t : {0.0, 3.0})
      for (double x : {-100.0, 100.0, 500.0}) CHECK(std::abs(std::abs(akhmediev_peregrine(x, t)) - 1.0) < 1e-3);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 10000; ++i) {
      const double x = u(rng), t = u(rng);
      const double m = std::abs(akhmediev_peregrine(x, t));
      CHECK(std::abs(std::abs(akhmediev_peregrine(-x, t)) - m) <= 1e-13 * m);
      CHECK(std::abs(std::abs(akhmediev_peregrine(x, -t)) - m) <= 1e-13 * m);
    }
  }
}

TEST_SUITE("evaluate_field") {
  TEST_CASE("peaks on the default grid") {
    const Grid1D g = Grid1D::standard();
    auto peak = [](const ComplexField& f) {
      const auto m = f.modulus();
      return *std::max_element(m.begin(), m.end());
    };
    const auto p = evaluate_field(SolitonKind::Peregrine, g, 0.0);
    CHECK(peak(p) == 3.0);
    CHECK(std::abs(p[512]) == 3.0);
    CHECK(p.time() == 0.0);
    const auto ap = evaluate_field(SolitonKind::AkhmedievPeregrine, g, 0.0);
    CHECK(std::abs(peak(ap) - 5.0) < 1e-12);
  }

  TEST_CASE("time reversal leaves the modulus unchanged") {
    const Grid1D g = Grid1D::standard();
    for (auto kind : {SolitonKind::Peregrine, SolitonKind::AkhmedievPeregrine}) {
      const auto a = evaluate_field(kind, g, 3.0).modulus();
      const auto b = evaluate_field(kind, g, -3.0).modulus();
      for (std::size_t j = 0; j < a.size(); ++j) CHECK(std::abs(a[j] - b[j]) <= 1e-14 * a[j]);
    }
  }

  TEST_CASE("centered evaluation shifts the profile") {
    const Grid1D g = Grid1D::standard();
    const auto f = evaluate_field_centered(SolitonKind::Peregrine, g, 0.0, 5.0);
    CHECK(std::abs(f[512 + 128]) == 3.0);  // x = 5 is grid index 640
  }

  TEST_CASE("soliton names") {
    CHECK(parse_soliton_kind("peregrine") == SolitonKind::Peregrine);
    CHECK(parse_soliton_kind("ap") == SolitonKind::AkhmedievPeregrine);
    CHECK(parse_soliton_kind("akhmediev-peregrine") == SolitonKind::AkhmedievPeregrine);
    CHECK_THROWS_AS(parse_soliton_kind("kuznetsov"), Error);
  }
}

TEST_SUITE("nlse") {
  TEST_CASE("plane wave background rotates in phase") {
    const Grid1D g(256, -10.0, 10.0);
    const double t0 = 0.3, t1 = 1.7;
    std::vector<Complex> v(g.size(), std::polar(1.0, t0));
    const ComplexField f(g, t0, v);
    const auto out = propagate_nlse(f, t1, 1400);
    CHECK(out.time() == t1);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(out[j] - std::polar(1.0, t1)) < 1e-10);
  }

  TEST_CASE("zero duration is the identity") {
    const auto f = evaluate_field(SolitonKind::Peregrine, Grid1D::standard(), -1.0);
    const auto out = propagate_nlse(f, -1.0, 10);
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(out[j] == f[j]);
  }

  TEST_CASE("propagated Peregrine matches the closed form") {
    const Grid1D g(2048, -40.0, 40.0);
    const auto start = evaluate_field(SolitonKind::Peregrine, g, -1.0);
    const auto out = propagate_nlse(start, 0.0, default_nlse_steps(1.0));
    const auto exact = evaluate_field(SolitonKind::Peregrine, g, 0.0);
    CHECK(relative_l2(out, exact) < 1e-4);
    CHECK(std::abs(out.discrete_norm() - start.discrete_norm()) <= 1e-8 * start.discrete_norm());
  }

  TEST_CASE("error paths") {
    const auto f = evaluate_field(SolitonKind::Peregrine, Grid1D(64, -10.0, 10.0), 0.0);
    CHECK_THROWS_AS(propagate_nlse(f, 1.0, 0), Error);
    try {
      propagate_nlse(f, 100.0, 1);  // |psi|^2 * dt far above the phase bound
      FAIL("expected StepTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::StepTooLarge);
    }
  }
}
