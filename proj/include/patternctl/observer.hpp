#pragma once

#include <vector>

#include <Eigen/Dense>

#include "patternctl/centralized.hpp"
#include "patternctl/graph.hpp"
#include "patternctl/plant.hpp"

namespace patternctl {

// Per-leader measurement of the augmented state: row 1 reads the leader's own
// agent state, row 2 its integrator state. `stacked` is the 2m x (n+m) pile
// in leader order.
struct MeasurementMap {
    std::vector<Eigen::MatrixXd> per_leader;
    Eigen::MatrixXd stacked;
};

MeasurementMap build_measurements(const PlantModel& plant);

struct ObserverOptions {
    double chi_safety_factor = 1.05;   // multiplier above the coupling bound
    Eigen::MatrixXd consensus_weight;  // W; empty means identity
};

// Distributed-observer synthesis output. The injection F comes from the
// filter Riccati equation (F = Phat C^T, m A - F C Hurwitz), T certifies it
// through the Lyapunov equation (m A - F C)^T T + T (m A - F C) = -I, and chi
// is placed strictly above the consensus-coupling bound computed from
// lambda_2 of the leader graph.
struct ObserverDesign {
    Eigen::MatrixXd filter_covariance;               // Phat
    Eigen::MatrixXd injection;                       // F, (n+m) x 2m
    std::vector<Eigen::MatrixXd> injection_blocks;   // F_j, (n+m) x 2
    std::vector<Eigen::MatrixXd> injection_loops;    // A - F_j C_j
    std::vector<Eigen::MatrixXd> observer_dynamics;  // N_j = A - B B^T P - F_j C_j
    Eigen::MatrixXd lyapunov_weight;                 // T
    Eigen::MatrixXd consensus_weight;                // W
    Eigen::MatrixXd stacked_coupling;                // K over e = [e_1; ...; e_m]
    Graph leader_graph{1, {}};
    double leader_lambda2 = 0.0;
    double coupling_bound = 0.0;  // right-hand side of the strict inequality
    double coupling_gain = 0.0;   // chi
    bool single_leader = false;   // m == 1: consensus term vanishes, chi unused
    int n = 0;
    int m = 0;
};

ObserverDesign design_observer(const AugmentedSystem& sys, const CentralizedDesign& design,
                               const MeasurementMap& measurements, const Graph& leader_graph,
                               const ObserverOptions& options = {});

// The positive-definiteness witness behind the chi bound:
// 2 chi lambda_2 I - Phi - Gram. Positive definite for the synthesized chi,
// indefinite once chi falls to half the bound (whenever the bound is
// positive). Undefined for a single leader.
Eigen::MatrixXd coupling_certificate(const ObserverDesign& od, double chi);

// Joint closed-loop data. error_matrix drives e' = W_hat e; coupling K_hat
// feeds the estimation error back into the plant; joint_matrix is the block
// upper-triangular [[Atilde, -K_hat], [0, W_hat]].
struct ErrorSystem {
    Eigen::MatrixXd error_matrix;  // W_hat, m(n+m) square
    Eigen::MatrixXd coupling;      // K_hat, (n+m) x m(n+m)
    Eigen::MatrixXd joint_matrix;  // M_hat
    double max_error_real_part = 0.0;
    int n = 0;
    int m = 0;
};

ErrorSystem build_error_system(const ObserverDesign& od, const CentralizedDesign& design);

BasinCheck in_basin_distributed(const ErrorSystem& es, const CentralizedDesign& design,
                                const Eigen::VectorXd& xbar0, const Eigen::VectorXd& e0,
                                const PatternSpec& spec);

// Theorem-limit predictor with the observer transient folded in:
// (psi1_hat^T xbar0 + psi1_hat^T K_hat W_hat^-1 e0) psi1.
Eigen::VectorXd predict_limit_distributed(const ErrorSystem& es,
                                          const CentralizedDesign& design,
                                          const Eigen::VectorXd& xbar0,
                                          const Eigen::VectorXd& e0);

}  // namespace patternctl
