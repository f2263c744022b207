#ifndef BIGSURV_TYPES_HPP
#define BIGSURV_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bigsurv {

// z_{0.975} used for every Wald interval.
inline constexpr double kWaldZ = 1.959964;

// Complete roster of the target population (simulation / oracle role).
struct FinitePopulation {
  std::vector<std::uint64_t> ids;  // unique, length N
  Eigen::MatrixXd x;               // N x p covariates
  Eigen::VectorXd y;               // study variable

  static FinitePopulation create(std::vector<std::uint64_t> ids,
                                 Eigen::MatrixXd x, Eigen::VectorXd y);

  std::size_t size() const { return ids.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(x.cols()); }
};

// Self-selected "big data" sample B. Membership of a population unit is
// represented by id containment, never by a full N-vector, so the sample can
// exist without the population roster.
struct BigDataSample {
  std::vector<std::uint64_t> ids;
  Eigen::MatrixXd x;  // N_B x p
  Eigen::VectorXd y;
  // Known N of the target population; required by estimators that need the
  // sampling fraction (absent in pure estimation mode when N is unknown).
  std::optional<std::uint64_t> population_size;

  static BigDataSample create(std::vector<std::uint64_t> ids, Eigen::MatrixXd x,
                              Eigen::VectorXd y,
                              std::optional<std::uint64_t> population_size);

  std::size_t size() const { return ids.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(x.cols()); }
  // f_B = N_B / N; requires population_size.
  double fraction() const;
};

// Reference probability sample A with design weights and big-data membership
// indicators. y is present only in simulation/oracle mode.
struct ProbabilitySample {
  std::vector<std::uint64_t> ids;
  Eigen::MatrixXd x;  // n x p
  Eigen::VectorXd d;  // positive design weights
  std::vector<std::uint8_t> delta;
  std::optional<Eigen::VectorXd> y;

  static ProbabilitySample create(std::vector<std::uint64_t> ids,
                                  Eigen::MatrixXd x, Eigen::VectorXd d,
                                  std::vector<std::uint8_t> delta,
                                  std::optional<Eigen::VectorXd> y);

  std::size_t size() const { return ids.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(x.cols()); }
};

enum class Method { Naive, Calibration, InverseSampling, PS, DR, Rivers, HTA };

const char* method_name(Method m);

// Point estimate with Wald-type interval.
struct EstimateReport {
  Method method;
  double theta_hat = 0.0;
  double var_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  static EstimateReport from(Method method, double theta_hat, double var_hat);
};

}  // namespace bigsurv

#endif
