#include "patternctl/observer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "patternctl/linear_checks.hpp"
#include "patternctl/riccati.hpp"
#include "patternctl/spectral.hpp"

namespace patternctl {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

// Phi + Gram of the coupling bound:
//   Phi  = diag(Lambda_j) + Tbar K + K^T Tbar,        Tbar = I_m (x) T
//   Gram = (Ltil + Ttil K)^T W^-1 (Ltil + Ttil K),    Ttil = [T ... T]
// with Lambda_j = (A - F_j C_j)^T T + T (A - F_j C_j) and Ltil their row.
Eigen::MatrixXd phi_plus_gram(const ObserverDesign& od) {
    const int size = od.n + od.m;
    const Eigen::MatrixXd& t = od.lyapunov_weight;
    const Eigen::MatrixXd& k = od.stacked_coupling;

    Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(od.m * size, od.m * size);
    Eigen::MatrixXd lambda_tilde(size, od.m * size);
    Eigen::MatrixXd t_tilde(size, od.m * size);
    for (int j = 0; j < od.m; ++j) {
        const Eigen::MatrixXd lambda_j =
            symmetrized(od.injection_loops[j].transpose() * t + t * od.injection_loops[j]);
        phi.block(j * size, j * size, size, size) = lambda_j;
        lambda_tilde.middleCols(j * size, size) = lambda_j;
        t_tilde.middleCols(j * size, size) = t;
    }
    Eigen::MatrixXd t_bar_k(od.m * size, od.m * size);
    for (int j = 0; j < od.m; ++j) {
        t_bar_k.middleRows(j * size, size) = t * k.middleRows(j * size, size);
    }
    phi += t_bar_k + t_bar_k.transpose();

    const Eigen::MatrixXd mixed = lambda_tilde + t_tilde * k;
    const Eigen::LDLT<Eigen::MatrixXd> w_ldlt(od.consensus_weight);
    if (w_ldlt.info() != Eigen::Success || !w_ldlt.isPositive()) {
        throw std::runtime_error("observer: consensus weight W is not positive definite");
    }
    return symmetrized(phi + mixed.transpose() * w_ldlt.solve(mixed));
}

}  // namespace

MeasurementMap build_measurements(const PlantModel& plant) {
    const int n = plant.agent_count();
    const int m = plant.leader_count();
    MeasurementMap map;
    map.stacked = Eigen::MatrixXd::Zero(2 * m, n + m);
    map.per_leader.reserve(m);
    for (int j = 0; j < m; ++j) {
        Eigen::MatrixXd cj = Eigen::MatrixXd::Zero(2, n + m);
        cj(0, plant.leaders[j] - 1) = 1.0;  // the leader's own agent state
        cj(1, n + j) = 1.0;                 // its integrator state
        map.stacked.middleRows(2 * j, 2) = cj;
        map.per_leader.push_back(std::move(cj));
    }
    return map;
}

ObserverDesign design_observer(const AugmentedSystem& sys, const CentralizedDesign& design,
                               const MeasurementMap& measurements, const Graph& leader_graph,
                               const ObserverOptions& options) {
    const int m = sys.m;
    const int size = sys.size();
    if (static_cast<int>(measurements.per_leader.size()) != m) {
        throw std::invalid_argument("design_observer: measurement count != leader count");
    }
    if (leader_graph.vertex_count() != m) {
        throw std::invalid_argument("design_observer: leader graph has " +
                                    std::to_string(leader_graph.vertex_count()) +
                                    " vertices, expected " + std::to_string(m));
    }
    if (m < 1) throw std::invalid_argument("design_observer: needs at least one leader");
    if (!leader_graph.is_connected()) {
        throw std::runtime_error("design_observer: leader graph is not connected");
    }
    if (!is_observable_pbh(sys.A, measurements.stacked)) {
        throw std::runtime_error("design_observer: (A, C) is not observable");
    }

    ObserverDesign od;
    od.leader_graph = leader_graph;
    od.single_leader = m == 1;
    od.n = sys.n;
    od.m = m;
    od.consensus_weight = options.consensus_weight.size() == 0
                              ? Eigen::MatrixXd::Identity(size, size)
                              : options.consensus_weight;
    if (od.consensus_weight.rows() != size || od.consensus_weight.cols() != size) {
        throw std::invalid_argument("design_observer: consensus weight W must be " +
                                    std::to_string(size) + " square");
    }

    od.filter_covariance = solve_filter_are(sys.A, measurements.stacked, m);
    od.injection = od.filter_covariance * measurements.stacked.transpose();
    od.lyapunov_weight =
        solve_lyapunov(m * sys.A - od.injection * measurements.stacked,
                       -Eigen::MatrixXd::Identity(size, size));

    const Eigen::MatrixXd state_feedback = sys.B * design.gain;  // B B^T P
    for (int j = 0; j < m; ++j) {
        od.injection_blocks.push_back(od.injection.middleCols(2 * j, 2));
        od.injection_loops.push_back(sys.A -
                                     od.injection_blocks[j] * measurements.per_leader[j]);
        od.observer_dynamics.push_back(od.injection_loops[j] - state_feedback);
    }

    // Stacked coupling over e = [e_1; ...; e_m]: every block row carries the
    // full row [B_1 B_1^T P ... B_m B_m^T P] minus B B^T P on the diagonal.
    od.stacked_coupling = Eigen::MatrixXd::Zero(m * size, m * size);
    for (int j = 0; j < m; ++j) {
        for (int col = 0; col < m; ++col) {
            od.stacked_coupling.block(j * size, col * size, size, size) =
                sys.B.col(col) * (sys.B.col(col).transpose() * design.P);
        }
        od.stacked_coupling.block(j * size, j * size, size, size) -= state_feedback;
    }

    if (od.single_leader) {
        // lambda_2 is undefined and the consensus sum is empty; the observer
        // degenerates to the plain filter loop and chi stays unused.
        return od;
    }

    od.leader_lambda2 = leader_graph.algebraic_connectivity();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(phi_plus_gram(od));
    od.coupling_bound = es.eigenvalues().maxCoeff() / (2.0 * od.leader_lambda2);
    if (options.chi_safety_factor <= 1.0) {
        throw std::invalid_argument("design_observer: chi safety factor must exceed 1");
    }
    od.coupling_gain =
        od.coupling_bound > 0.0 ? options.chi_safety_factor * od.coupling_bound : 1.0;
    return od;
}

Eigen::MatrixXd coupling_certificate(const ObserverDesign& od, double chi) {
    if (od.single_leader) {
        throw std::invalid_argument("coupling_certificate: undefined for a single leader");
    }
    const int dim = od.m * (od.n + od.m);
    return 2.0 * chi * od.leader_lambda2 * Eigen::MatrixXd::Identity(dim, dim) -
           phi_plus_gram(od);
}

ErrorSystem build_error_system(const ObserverDesign& od, const CentralizedDesign& design) {
    const AugmentedSystem& sys = design.sys;
    const int m = od.m;
    const int size = sys.size();
    if (od.n != sys.n || od.m != sys.m) {
        throw std::invalid_argument("build_error_system: design dimension mismatch");
    }

    ErrorSystem es;
    es.n = sys.n;
    es.m = m;

    // W_hat = diag(A - F_j C_j) + K - chi (L1 (x) T^-1)
    es.error_matrix = od.stacked_coupling;
    for (int j = 0; j < m; ++j) {
        es.error_matrix.block(j * size, j * size, size, size) += od.injection_loops[j];
    }
    if (!od.single_leader) {
        const Eigen::MatrixXd t_inv =
            od.lyapunov_weight.ldlt().solve(Eigen::MatrixXd::Identity(size, size));
        const Eigen::MatrixXd l1 = od.leader_graph.laplacian();
        for (int j = 0; j < m; ++j) {
            for (int col = 0; col < m; ++col) {
                if (l1(j, col) != 0.0) {
                    es.error_matrix.block(j * size, col * size, size, size) -=
                        od.coupling_gain * l1(j, col) * t_inv;
                }
            }
        }
    }

    es.max_error_real_part = spectral_abscissa(es.error_matrix);
    if (es.max_error_real_part >= -1e-9) {
        throw std::runtime_error("build_error_system: error dynamics not Hurwitz (max Re = " +
                                 std::to_string(es.max_error_real_part) + ")");
    }

    es.coupling.resize(size, m * size);
    for (int col = 0; col < m; ++col) {
        es.coupling.middleCols(col * size, size) =
            sys.B.col(col) * (sys.B.col(col).transpose() * design.P);
    }

    es.joint_matrix = Eigen::MatrixXd::Zero(size + m * size, size + m * size);
    es.joint_matrix.topLeftCorner(size, size) = design.closed_loop;
    es.joint_matrix.topRightCorner(size, m * size) = -es.coupling;
    es.joint_matrix.bottomRightCorner(m * size, m * size) = es.error_matrix;
    return es;
}

BasinCheck in_basin_distributed(const ErrorSystem& es, const CentralizedDesign& design,
                                const Eigen::VectorXd& xbar0, const Eigen::VectorXd& e0,
                                const PatternSpec& spec) {
    if (e0.size() != es.error_matrix.rows()) {
        throw std::invalid_argument("in_basin_distributed: e0 length mismatch");
    }
    const Eigen::VectorXd shifted =
        xbar0 + es.coupling * es.error_matrix.partialPivLu().solve(e0);
    return in_basin(design, shifted, spec);
}

Eigen::VectorXd predict_limit_distributed(const ErrorSystem& es,
                                          const CentralizedDesign& design,
                                          const Eigen::VectorXd& xbar0,
                                          const Eigen::VectorXd& e0) {
    if (e0.size() != es.error_matrix.rows()) {
        throw std::invalid_argument("predict_limit_distributed: e0 length mismatch");
    }
    const Eigen::VectorXd shifted =
        xbar0 + es.coupling * es.error_matrix.partialPivLu().solve(e0);
    return predict_limit(design, shifted);
}

}  // namespace patternctl
