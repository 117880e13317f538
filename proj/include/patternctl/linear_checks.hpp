#pragma once

#include <Eigen/Dense>

namespace patternctl {

// Rank tests for LTI pairs. The PBH variants test rank at every eigenvalue
// and are the primary method (better conditioned than Kalman stacking once
// the state dimension grows); the Kalman variants exist as an independent
// cross-check. Rank thresholds are relative: sigma > tol * sigma_max.

bool is_controllable_pbh(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                         double tol = 1e-8);
bool is_observable_pbh(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c,
                       double tol = 1e-8);

bool is_controllable_kalman(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                            double tol = 1e-8);
bool is_observable_kalman(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c,
                          double tol = 1e-8);

}  // namespace patternctl
