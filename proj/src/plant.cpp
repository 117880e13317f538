#include "patternctl/plant.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "patternctl/linear_checks.hpp"

namespace patternctl {

PlantModel::PlantModel(Graph g, double a, std::vector<int> leaders_in)
    : graph(std::move(g)), self_gain(a), leaders(std::move(leaders_in)) {
    const int n = graph.vertex_count();
    if (static_cast<int>(leaders.size()) > n) {
        throw std::invalid_argument("PlantModel: more leaders than vertices");
    }
    std::set<int> seen;
    for (int v : leaders) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("PlantModel: leader " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        }
        if (!seen.insert(v).second) {
            throw std::invalid_argument("PlantModel: duplicated leader " + std::to_string(v));
        }
    }
}

bool PlantModel::is_leader(int v) const {
    return std::find(leaders.begin(), leaders.end(), v) != leaders.end();
}

Eigen::MatrixXd PlantModel::input_matrix() const {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(agent_count(), leader_count());
    for (int j = 0; j < leader_count(); ++j) b(leaders[j] - 1, j) = 1.0;
    return b;
}

Eigen::MatrixXd PlantModel::drift_matrix() const {
    const int n = agent_count();
    return -graph.laplacian() + self_gain * Eigen::MatrixXd::Identity(n, n);
}

AugmentedSystem build_augmented(const PlantModel& plant, const Eigen::MatrixXd& q_pattern) {
    const int n = plant.agent_count();
    const int m = plant.leader_count();
    if (q_pattern.rows() != n || q_pattern.cols() != n) {
        throw std::invalid_argument("build_augmented: pattern matrix must be " +
                                    std::to_string(n) + "x" + std::to_string(n));
    }
    AugmentedSystem sys;
    sys.n = n;
    sys.m = m;
    sys.A = Eigen::MatrixXd::Zero(n + m, n + m);
    sys.A.topLeftCorner(n, n) = plant.drift_matrix();
    sys.A.topRightCorner(n, m) = plant.input_matrix();
    sys.B = Eigen::MatrixXd::Zero(n + m, m);
    sys.B.bottomRows(m) = Eigen::MatrixXd::Identity(m, m);
    sys.Q = Eigen::MatrixXd::Zero(n + m, n + m);
    sys.Q.topLeftCorner(n, n) = q_pattern;
    return sys;
}

EquilibriumResult solve_equilibrium(const PlantModel& plant, const PatternSpec& spec) {
    const int n = plant.agent_count();
    if (spec.alpha.size() != n) {
        throw std::invalid_argument("solve_equilibrium: alpha length mismatch");
    }
    // B u* = (L - aI) alpha: leaders absorb their own residual entry, every
    // follower's entry must vanish.
    const Eigen::VectorXd residual =
        plant.graph.laplacian() * spec.alpha - plant.self_gain * spec.alpha;
    const double tol =
        1e-10 * (1.0 + std::abs(plant.self_gain) + residual.lpNorm<Eigen::Infinity>());

    EquilibriumResult result;
    for (int v = 1; v <= n; ++v) {
        if (plant.is_leader(v)) continue;
        if (std::abs(residual(v - 1)) > tol) {
            result.blocking_followers.push_back(v);
            result.blocking_residuals.push_back(residual(v - 1));
        }
    }
    if (!result.blocking_followers.empty()) return result;

    result.feasible = true;
    result.equilibrium.x_star = spec.alpha;
    result.equilibrium.u_star.resize(plant.leader_count());
    for (int j = 0; j < plant.leader_count(); ++j) {
        result.equilibrium.u_star(j) = residual(plant.leaders[j] - 1);
    }
    return result;
}

AssumptionReport check_assumptions(const PlantModel& plant, const Eigen::MatrixXd& q_pattern) {
    AssumptionReport report;
    report.graph_connected = plant.graph.is_connected();
    const Eigen::MatrixXd drift = plant.drift_matrix();
    const Eigen::MatrixXd b = plant.input_matrix();
    report.plant_controllable = is_controllable_pbh(drift, b);
    report.plant_observable = is_observable_pbh(drift, q_pattern);
    const AugmentedSystem sys = build_augmented(plant, q_pattern);
    report.augmented_controllable = is_controllable_pbh(sys.A, sys.B);
    return report;
}

}  // namespace patternctl
