#pragma once

#include <Eigen/Dense>

namespace patternctl {

// Full eigenstructure of a real square matrix: eigenvalues, right
// eigenvectors (columns of `right`), and left eigenvectors (columns of
// `left`, plain-transpose convention: left.col(i)^T M = values(i) *
// left.col(i)^T) binormalized so left.col(i)^T right.col(j) = delta_ij.
// Left vectors are only produced when the right-eigenvector basis is
// invertible with condition number below `cond_limit`; a defective matrix
// (Jordan block) trips the flag instead.
struct EigenPairs {
    Eigen::VectorXcd values;
    Eigen::MatrixXcd right;
    Eigen::MatrixXcd left;
    double basis_condition = 0.0;
    bool well_conditioned = false;
};

EigenPairs eig_full(const Eigen::MatrixXd& m, double cond_limit = 1e10);

// Largest real part over all eigenvalues.
double spectral_abscissa(const Eigen::MatrixXd& m);

// Largest singular value (operator 2-norm).
double operator_norm(const Eigen::MatrixXd& m);

}  // namespace patternctl
