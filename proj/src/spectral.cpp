#include "patternctl/spectral.hpp"

#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace patternctl {

EigenPairs eig_full(const Eigen::MatrixXd& m, double cond_limit) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig_full: matrix not square");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig_full: eigensolver did not converge");
    }
    EigenPairs pairs;
    pairs.values = solver.eigenvalues();
    pairs.right = solver.eigenvectors();

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pairs.right);
    const auto& sigma = svd.singularValues();
    const double smin = sigma(sigma.size() - 1);
    pairs.basis_condition =
        smin > 0.0 ? sigma(0) / smin : std::numeric_limits<double>::infinity();
    pairs.well_conditioned = pairs.basis_condition <= cond_limit;
    if (pairs.well_conditioned) {
        // Rows of right^-1 are the left eigenvectors under the plain
        // transpose convention, already binormalized against the columns.
        pairs.left = pairs.right.inverse().transpose();
    }
    return pairs;
}

double spectral_abscissa(const Eigen::MatrixXd& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    return solver.eigenvalues().real().maxCoeff();
}

double operator_norm(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

}  // namespace patternctl
