// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "roguewave/grid.hpp"

namespace roguewave {

/// M distinct grid indices standing for randomly placed point sensors.
struct SensingPlan {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> indices;  // strictly increasing

  friend bool operator==(const SensingPlan&, const SensingPlan&) = default;
};

/// Draws m of [0, n) uniformly without replacement (partial Fisher-Yates on a
/// mt19937_64 stream seeded with `seed`), then sorts. Throws MTooLarge when
/// m > n and InvalidArgument when m == 0.
SensingPlan make_plan(std::size_t n, std::size_t m, std::uint64_t seed);

/// Checks the SensingPlan invariants; throws InvalidArgument.
void validate_plan(const SensingPlan& plan);

struct Measurements {
  SensingPlan plan;
  double time = 0.0;
  std::vector<Complex> values;
};

/// Point samples psi(x_j) for j in plan.indices. Throws PlanMismatch.
Measurements sample(const ComplexField& field, const SensingPlan& plan);

/// sqrt(n) * max |<e_j, h_k>| over selected rows j and Haar basis vectors h_k.
double coherence(const SensingPlan& plan, std::size_t n);

}  // namespace roguewave
