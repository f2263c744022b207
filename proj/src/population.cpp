#include "bigsurv/population.hpp"

#include <cmath>
#include <unordered_set>

#include "bigsurv/errors.hpp"

namespace bigsurv {

double population_mean(const FinitePopulation& pop,
                       const std::function<double(double)>& transform) {
  double sum = 0.0;
  const auto n = pop.y.size();
  if (transform) {
    for (Eigen::Index i = 0; i < n; ++i) sum += transform(pop.y[i]);
  } else {
    sum = pop.y.sum();
  }
  return sum / static_cast<double>(n);
}

ErrorDecomposition error_decomposition(const FinitePopulation& pop,
                                       const BigDataSample& big) {
  const auto n = static_cast<double>(pop.size());

  std::unordered_set<std::uint64_t> members(big.ids.begin(), big.ids.end());
  const double ybar_n = pop.y.sum() / n;

  // Membership is by id containment; y values come from the population side.
  double sum_big = 0.0;
  std::size_t n_b = 0;
  double cov = 0.0;
  double sigma2 = 0.0;
  const double f_b = static_cast<double>(big.size()) / n;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const double dev = pop.y[static_cast<Eigen::Index>(i)] - ybar_n;
    sigma2 += dev * dev;
    const bool in_big = members.count(pop.ids[i]) > 0;
    if (in_big) {
      sum_big += pop.y[static_cast<Eigen::Index>(i)];
      ++n_b;
    }
    cov += ((in_big ? 1.0 : 0.0) - f_b) * dev;
  }
  if (n_b != big.size())
    throw InvariantError(
        "error_decomposition: big sample ids are not a subset of the "
        "population ids");
  sigma2 /= n;
  cov /= n;

  ErrorDecomposition out;
  out.error = sum_big / static_cast<double>(big.size()) - ybar_n;
  out.cov_delta_y = cov;
  out.f_B = f_b;
  out.sigma2 = sigma2;
  const double var_delta = f_b * (1.0 - f_b);
  if (var_delta > 0.0 && sigma2 > 0.0)
    out.corr_delta_y = cov / std::sqrt(var_delta * sigma2);
  return out;
}

}  // namespace bigsurv
