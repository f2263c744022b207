#include "bigsurv/types.hpp"

#include <cmath>
#include <unordered_set>

#include "bigsurv/errors.hpp"

namespace bigsurv {

namespace {

void require_unique_ids(const std::vector<std::uint64_t>& ids,
                        const char* what) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(ids.size() * 2);
  for (std::uint64_t id : ids) {
    if (!seen.insert(id).second)
      throw InvariantError(std::string(what) + ": duplicate id " +
                           std::to_string(id));
  }
}

}  // namespace

FinitePopulation FinitePopulation::create(std::vector<std::uint64_t> ids,
                                          Eigen::MatrixXd x,
                                          Eigen::VectorXd y) {
  const auto n = static_cast<Eigen::Index>(ids.size());
  if (n < 1) throw InvariantError("FinitePopulation: N must be >= 1");
  if (x.rows() != n || y.size() != n)
    throw InvariantError("FinitePopulation: ids, x and y must have N rows");
  require_unique_ids(ids, "FinitePopulation");
  return {std::move(ids), std::move(x), std::move(y)};
}

BigDataSample BigDataSample::create(
    std::vector<std::uint64_t> ids, Eigen::MatrixXd x, Eigen::VectorXd y,
    std::optional<std::uint64_t> population_size) {
  const auto n = static_cast<Eigen::Index>(ids.size());
  if (n < 1) throw InvariantError("BigDataSample: N_B must be >= 1");
  if (x.rows() != n || y.size() != n)
    throw InvariantError("BigDataSample: ids, x and y must have N_B rows");
  require_unique_ids(ids, "BigDataSample");
  if (population_size && *population_size < ids.size())
    throw InvariantError(
        "BigDataSample: stated population size N = " +
        std::to_string(*population_size) + " is smaller than N_B = " +
        std::to_string(ids.size()));
  return {std::move(ids), std::move(x), std::move(y), population_size};
}

double BigDataSample::fraction() const {
  if (!population_size)
    throw InvariantError("BigDataSample: population size N is not known");
  return static_cast<double>(ids.size()) /
         static_cast<double>(*population_size);
}

ProbabilitySample ProbabilitySample::create(std::vector<std::uint64_t> ids,
                                            Eigen::MatrixXd x,
                                            Eigen::VectorXd d,
                                            std::vector<std::uint8_t> delta,
                                            std::optional<Eigen::VectorXd> y) {
  const auto n = static_cast<Eigen::Index>(ids.size());
  if (n < 1) throw InvariantError("ProbabilitySample: n must be >= 1");
  if (x.rows() != n || d.size() != n ||
      static_cast<Eigen::Index>(delta.size()) != n)
    throw InvariantError("ProbabilitySample: ids, x, d, delta sizes disagree");
  if (y && y->size() != n)
    throw InvariantError("ProbabilitySample: y must have n rows when present");
  require_unique_ids(ids, "ProbabilitySample");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(d[i] > 0.0))
      throw InvariantError("ProbabilitySample: nonpositive design weight at row " +
                           std::to_string(i + 1));
    if (delta[static_cast<std::size_t>(i)] > 1)
      throw InvariantError("ProbabilitySample: delta must be 0 or 1 at row " +
                           std::to_string(i + 1));
  }
  return {std::move(ids), std::move(x), std::move(d), std::move(delta),
          std::move(y)};
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Naive: return "Naive";
    case Method::Calibration: return "Calibration";
    case Method::InverseSampling: return "InverseSampling";
    case Method::PS: return "PS";
    case Method::DR: return "DR";
    case Method::Rivers: return "Rivers";
    case Method::HTA: return "HT-A";
  }
  return "?";
}

EstimateReport EstimateReport::from(Method method, double theta_hat,
                                    double var_hat) {
  if (!(var_hat >= 0.0))
    throw InvariantError("EstimateReport: variance must be nonnegative");
  const double half = kWaldZ * std::sqrt(var_hat);
  return {method, theta_hat, var_hat, theta_hat - half, theta_hat + half};
}

}  // namespace bigsurv
