#include "patternctl/centralized.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "patternctl/spectral.hpp"

namespace patternctl {

CentralizedDesign synthesize_centralized(const AugmentedSystem& sys, const Equilibrium& eq) {
    if (eq.x_star.size() != sys.n || eq.u_star.size() != sys.m) {
        throw std::invalid_argument("synthesize_centralized: equilibrium size mismatch");
    }
    CentralizedDesign design;
    design.sys = sys;
    design.psi1.resize(sys.size());
    design.psi1 << eq.x_star, eq.u_star;

    const CareSolution care = solve_care_minimal(sys, design.psi1);
    design.P = care.P;
    design.care_residual = care.residual_norm;
    design.kernel_norm = care.kernel_check;
    design.gain = sys.B.transpose() * design.P;
    design.closed_loop = sys.A - sys.B * design.gain;

    // Left null vector of the closed loop, normalized against psi1. A tiny
    // overlap would mean the zero eigenvalue is defective, contradicting the
    // simple-zero structure the assumptions guarantee.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design.closed_loop, Eigen::ComputeFullU);
    const Eigen::VectorXd left_null = svd.matrixU().col(sys.size() - 1);
    const double overlap = left_null.dot(design.psi1);
    if (std::abs(overlap) < 1e-10) {
        throw std::runtime_error(
            "synthesize_centralized: left null vector orthogonal to psi1 (defective zero "
            "eigenvalue; assumption violation)");
    }
    design.psi1_hat = left_null / overlap;
    return design;
}

SpectralCertificate certify_spectrum(const Eigen::MatrixXd& closed_loop,
                                     const Eigen::MatrixXd& p, const Eigen::VectorXd& psi1,
                                     double zero_rel_tol, double hurwitz_margin,
                                     double kernel_tol) {
    SpectralCertificate cert;
    cert.zero_threshold = zero_rel_tol * operator_norm(closed_loop);
    Eigen::EigenSolver<Eigen::MatrixXd> eig(closed_loop, false);
    double max_other = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        const std::complex<double> lambda = eig.eigenvalues()(i);
        if (std::abs(lambda) <= cert.zero_threshold) {
            ++cert.zero_count;
        } else {
            max_other = std::max(max_other, lambda.real());
        }
    }
    cert.max_other_real_part = max_other;
    cert.p_kernel_norm = (p * psi1).norm();
    cert.pass = cert.zero_count == 1 && cert.max_other_real_part < -hurwitz_margin &&
                cert.p_kernel_norm <= kernel_tol;
    return cert;
}

SpectralCertificate certify_spectrum(const CentralizedDesign& design, double zero_rel_tol,
                                     double hurwitz_margin, double kernel_tol) {
    return certify_spectrum(design.closed_loop, design.P, design.psi1, zero_rel_tol,
                            hurwitz_margin, kernel_tol);
}

BasinCheck in_basin(const CentralizedDesign& design, const Eigen::VectorXd& xbar0,
                    const PatternSpec& spec) {
    if (xbar0.size() != design.sys.size()) {
        throw std::invalid_argument("in_basin: initial state length mismatch");
    }
    BasinCheck check;
    check.projection = std::abs(design.psi1_hat.dot(xbar0));
    const double x_star_norm = design.psi1.head(design.sys.n).norm();
    check.threshold = spec.p0 * std::sqrt(static_cast<double>(design.sys.n)) / x_star_norm;
    check.margin = check.projection - check.threshold;
    check.inside = check.margin > 0.0;
    return check;
}

Eigen::VectorXd predict_limit(const CentralizedDesign& design, const Eigen::VectorXd& xbar0) {
    if (xbar0.size() != design.sys.size()) {
        throw std::invalid_argument("predict_limit: initial state length mismatch");
    }
    return design.psi1_hat.dot(xbar0) * design.psi1;
}

}  // namespace patternctl
