// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The roguewave Authors

#include "roguewave/recovery.hpp"

#include <algorithm>

#include "roguewave/error.hpp"
#include "roguewave/haar.hpp"

namespace roguewave {

RecoveryResult recover(const Measurements& meas, const Grid1D& grid, const BpConfig& cfg) {
  validate_plan(meas.plan);
  if (meas.plan.n != grid.size())
    throw Error(ErrorCode::PlanMismatch, "measurement plan does not match the grid size");
  if (meas.values.size() != meas.plan.m)
    throw Error(ErrorCode::InvalidArgument, "measurement count does not match the plan");

  std::vector<double> re(meas.values.size()), im(meas.values.size());
  for (std::size_t k = 0; k < meas.values.size(); ++k) {
    re[k] = meas.values[k].real();
    im[k] = meas.values[k].imag();
  }
  BpSolution re_sol = basis_pursuit(re, meas.plan, grid.size(), cfg);
  BpSolution im_sol = basis_pursuit(im, meas.plan, grid.size(), cfg);

  const std::vector<double> re_signal = haar_idwt(DwtCoefficients{re_sol.coefficients});
  const std::vector<double> im_signal = haar_idwt(DwtCoefficients{im_sol.coefficients});
  std::vector<Complex> values(grid.size());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = Complex(re_signal[j], im_signal[j]);

  return RecoveryResult{
      ComplexField(grid, meas.time, std::move(values)),
      std::move(re_sol.coefficients),
      std::move(im_sol.coefficients),
      std::max(re_sol.iterations, im_sol.iterations),
      std::max(re_sol.residual, im_sol.residual),
      re_sol.converged && im_sol.converged,
  };
}

}  // namespace roguewave
