#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "patternctl/centralized.hpp"
#include "patternctl/observer.hpp"

namespace patternctl {

struct SimulateOptions {
    double t_end = 20.0;
    double dt = 1e-3;
    double convergence_tol = 1e-8;  // relative, between consecutive stored samples
    int store_every = 10;           // keep every k-th step (the final step always)
};

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;
    std::vector<Eigen::VectorXd> error_norms;  // distributed runs: per-leader ||e_j||
    Eigen::VectorXd limit_estimate;            // final full-precision state
    bool converged = false;
    bool horizon_warning = false;    // t_end below the recommended decay horizon
    double recommended_t_end = 0.0;  // 3 / |slowest stable real part| when known
};

// Exact LTI propagation: one matrix exponential E = exp(M dt) (scaling and
// squaring), then w <- E w. Sample values are exact up to roundoff no matter
// how stiff M is, which is the point once the observer coupling pushes
// eigenvalues to O(chi). Throws on non-finite input and on state blow-up
// beyond 1e12.
TrajectoryRecord simulate_lti(const Eigen::MatrixXd& m, const Eigen::VectorXd& w0,
                              const SimulateOptions& options = {});

TrajectoryRecord simulate_centralized(const CentralizedDesign& design,
                                      const Eigen::VectorXd& xbar0,
                                      const SimulateOptions& options = {});

TrajectoryRecord simulate_distributed(const ErrorSystem& es, const CentralizedDesign& design,
                                      const Eigen::VectorXd& xbar0, const Eigen::VectorXd& e0,
                                      const SimulateOptions& options = {});

// CSV export: header t,x_1..x_n,z_1..z_m[,e_norm_1..e_norm_m]; states beyond
// n+m columns (the raw observer errors) are reduced to the per-leader norms.
void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& record, int n, int m);
void write_trajectory_csv(const std::string& path, const TrajectoryRecord& record, int n,
                          int m);

}  // namespace patternctl
