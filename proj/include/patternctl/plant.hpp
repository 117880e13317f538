#pragma once

#include <vector>

#include <Eigen/Dense>

#include "patternctl/graph.hpp"
#include "patternctl/pattern.hpp"

namespace patternctl {

// Laplacian plant xdot = (-L + a I) x + B u. The ordered leader list fixes
// everything downstream: column j of B, integrator state z_j, and the j-th
// observer measurement all belong to leader j. The paper-reproduction
// scenario uses the leader order {3,2,1,4,7,8,9} on the 3x3 grid.
struct PlantModel {
    Graph graph;
    double self_gain;          // the constant a
    std::vector<int> leaders;  // ordered, distinct, 1-based; may be empty

    PlantModel(Graph g, double a, std::vector<int> leaders_in);

    int agent_count() const { return graph.vertex_count(); }
    int leader_count() const { return static_cast<int>(leaders.size()); }
    bool is_leader(int v) const;

    Eigen::MatrixXd input_matrix() const;  // B, n x m selector
    Eigen::MatrixXd drift_matrix() const;  // -L + a I
};

// Integrator-augmented LQ data on state [x; z]:
//   A = [-L+aI  B; 0  0],  B = [0; I_m],  Q = blkdiag(Q_pattern, 0).
struct AugmentedSystem {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    Eigen::MatrixXd Q;
    int n = 0;
    int m = 0;

    int size() const { return n + m; }
};

AugmentedSystem build_augmented(const PlantModel& plant, const Eigen::MatrixXd& q_pattern);

struct Equilibrium {
    Eigen::VectorXd x_star;  // = alpha (representative scaling p = 1)
    Eigen::VectorXd u_star;  // per-leader steady input, in leader order
};

// Feasibility diagnostic for the pattern equilibrium: B u* = (L - aI) alpha
// is solvable iff every follower's residual vanishes. Infeasibility is a
// structured result, not an exception.
struct EquilibriumResult {
    bool feasible = false;
    Equilibrium equilibrium;                // valid when feasible
    std::vector<int> blocking_followers;    // vertices whose residual is nonzero
    std::vector<double> blocking_residuals; // matching residual values
};

EquilibriumResult solve_equilibrium(const PlantModel& plant, const PatternSpec& spec);

// Per-assumption verdicts; all_pass() gates synthesis.
struct AssumptionReport {
    bool graph_connected = false;         // Assumption 1
    bool plant_controllable = false;      // (-L+aI, B)
    bool plant_observable = false;        // (-L+aI, Q)
    bool augmented_controllable = false;  // (A, B) of the augmented system

    bool all_pass() const {
        return graph_connected && plant_controllable && plant_observable &&
               augmented_controllable;
    }
};

AssumptionReport check_assumptions(const PlantModel& plant, const Eigen::MatrixXd& q_pattern);

}  // namespace patternctl
