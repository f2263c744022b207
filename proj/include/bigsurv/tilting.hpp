#ifndef BIGSURV_TILTING_HPP
#define BIGSURV_TILTING_HPP

#include <Eigen/Dense>
#include <functional>

namespace bigsurv {

struct TiltingOptions {
  double tolerance = 1e-10;  // max-norm of the calibration residual
  int max_iterations = 100;
  int step_halving_limit = 30;
  bool one_step = false;  // single Newton step from lambda = 0
};

// Solution of the calibration equation
//   sum_i exp(x_i'lambda) x_i / sum_i exp(x_i'lambda) = target_mean.
struct TiltingSolution {
  Eigen::VectorXd lambda;
  Eigen::VectorXd weights;  // exp(x_i'lambda) normalized to sum 1
  int iterations = 0;
  bool converged = false;
  double residual_norm = 0.0;
};

// Called once per accepted iteration with the convex potential
// K(lambda) = log sum exp(x_i'lambda) - lambda'target and the residual norm.
using IterationObserver =
    std::function<void(int iteration, double potential, double residual_norm)>;

// Solves the calibration equation by Newton descent on the convex potential
// K(lambda), with step halving. Targets outside the open convex hull of the
// rows of x produce a ConvergenceError; collinear columns a SingularityError.
TiltingSolution solve_calibration(const Eigen::MatrixXd& x,
                                  const Eigen::VectorXd& target_mean,
                                  const TiltingOptions& opts = {},
                                  const IterationObserver& observer = {});

// One-step approximation: S_xx^{-1} (target - xbar), where S_xx is the
// divide-by-N_B covariance of the rows of x.
Eigen::VectorXd one_step_lambda(const Eigen::MatrixXd& x,
                                const Eigen::VectorXd& target_mean);

// sum_i weights_i y_i.
double tilted_estimator(const TiltingSolution& sol, const Eigen::VectorXd& y);

}  // namespace bigsurv

#endif
