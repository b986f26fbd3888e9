// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "roguewave/error.hpp"

namespace roguewave {
namespace {

// Unbiased draw from [0, bound) by rejection. std::uniform_int_distribution is
// implementation-defined, which would make plans differ between toolchains.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace

SensingPlan make_plan(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "sensing plan needs m >= 1");
  if (m > n)
    throw Error(ErrorCode::MTooLarge,
                "cannot draw m=" + std::to_string(m) + " distinct samples from n=" + std::to_string(n));
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = i + static_cast<std::size_t>(bounded(rng, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return SensingPlan{n, m, seed, std::move(pool)};
}

void validate_plan(const SensingPlan& plan) {
  if (plan.m == 0 || plan.indices.size() != plan.m)
    throw Error(ErrorCode::InvalidArgument, "sensing plan index count does not match m");
  if (plan.m > plan.n) throw Error(ErrorCode::MTooLarge, "sensing plan has m > n");
  for (std::size_t k = 0; k < plan.indices.size(); ++k) {
    if (plan.indices[k] >= plan.n)
      throw Error(ErrorCode::InvalidArgument, "sensing index out of range: " + std::to_string(plan.indices[k]));
    if (k > 0 && plan.indices[k] <= plan.indices[k - 1])
      throw Error(ErrorCode::InvalidArgument, "sensing indices must be strictly increasing");
  }
}

Measurements sample(const ComplexField& field, const SensingPlan& plan) {
  if (plan.n != field.size())
    throw Error(ErrorCode::PlanMismatch, "plan is for n=" + std::to_string(plan.n) +
                                             " but the field has " + std::to_string(field.size()) +
                                             " points");
  validate_plan(plan);
  Measurements meas{plan, field.time(), {}};
  meas.values.reserve(plan.m);
  for (std::size_t j : plan.indices) meas.values.push_back(field[j]);
  return meas;
}

double coherence(const SensingPlan& plan, std::size_t n) {
  if (plan.n != n) throw Error(ErrorCode::PlanMismatch, "plan size differs from n");
  // Order is irrelevant here, so only the index range is checked.
  if (plan.indices.empty()) throw Error(ErrorCode::InvalidArgument, "sensing plan is empty");
  for (std::size_t j : plan.indices)
    if (j >= n) throw Error(ErrorCode::InvalidArgument, "sensing index out of range: " + std::to_string(j));
  // Every orthonormal Haar vector touching j has |h_k(j)| = 1/sqrt(support);
  // the approximation vector has support n, a level-l detail n / 2^l.
  double largest = 0.0;
  for ([[maybe_unused]] std::size_t j : plan.indices) {
    for (std::size_t support = n; support >= 2; support /= 2)
      largest = std::max(largest, 1.0 / std::sqrt(static_cast<double>(support)));
  }
  return std::sqrt(static_cast<double>(n)) * largest;
}

}  // namespace roguewave
