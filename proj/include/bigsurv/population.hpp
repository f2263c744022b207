#ifndef BIGSURV_POPULATION_HPP
#define BIGSURV_POPULATION_HPP

#include <functional>
#include <optional>

#include "bigsurv/types.hpp"

namespace bigsurv {

// N^{-1} sum transform(y_i); identity transform when none is given.
double population_mean(const FinitePopulation& pop,
                       const std::function<double(double)>& transform = {});

// Exact finite-population decomposition of the big-sample error
//   Ybar_B - Ybar_N = Cov(delta, Y) / f_B
// together with the squared-error identity
//   (Ybar_B - Ybar_N)^2 = Corr(delta, Y)^2 (1/f_B - 1) sigma^2.
// Both covariance and sigma^2 use the divide-by-N convention. corr_delta_y is
// absent when Var(delta) = 0 (f_B = 1) or sigma^2 = 0.
struct ErrorDecomposition {
  double error = 0.0;
  double cov_delta_y = 0.0;
  std::optional<double> corr_delta_y;
  double f_B = 0.0;
  double sigma2 = 0.0;
};

ErrorDecomposition error_decomposition(const FinitePopulation& pop,
                                       const BigDataSample& big);

}  // namespace bigsurv

#endif
