#include "patternctl/linear_checks.hpp"

#include <stdexcept>

namespace patternctl {

namespace {

Eigen::Index rank_with_relative_threshold(const Eigen::MatrixXcd& m, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0) return 0;
    const double cutoff = tol * sigma(0);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff) ++rank;
    }
    return rank;
}

void check_square(const Eigen::MatrixXd& a, const char* who) {
    if (a.rows() != a.cols()) throw std::invalid_argument(std::string(who) + ": A not square");
}

}  // namespace

bool is_controllable_pbh(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
    check_square(a, "is_controllable_pbh");
    if (b.rows() != a.rows()) {
        throw std::invalid_argument("is_controllable_pbh: B row count mismatch");
    }
    const Eigen::Index n = a.rows();
    if (b.cols() == 0) return n == 0;
    Eigen::EigenSolver<Eigen::MatrixXd> eig(a, false);
    Eigen::MatrixXcd pencil(n, n + b.cols());
    pencil.rightCols(b.cols()) = b.cast<std::complex<double>>();
    for (Eigen::Index k = 0; k < n; ++k) {
        pencil.leftCols(n) =
            a.cast<std::complex<double>>() -
            eig.eigenvalues()(k) * Eigen::MatrixXcd::Identity(n, n);
        if (rank_with_relative_threshold(pencil, tol) < n) return false;
    }
    return true;
}

bool is_observable_pbh(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c, double tol) {
    return is_controllable_pbh(a.transpose(), c.transpose(), tol);
}

bool is_controllable_kalman(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
    check_square(a, "is_controllable_kalman");
    if (b.rows() != a.rows()) {
        throw std::invalid_argument("is_controllable_kalman: B row count mismatch");
    }
    const Eigen::Index n = a.rows();
    const Eigen::Index m = b.cols();
    if (m == 0) return n == 0;
    Eigen::MatrixXd reach(n, n * m);
    reach.leftCols(m) = b;
    for (Eigen::Index k = 1; k < n; ++k) {
        reach.middleCols(k * m, m) = a * reach.middleCols((k - 1) * m, m);
    }
    return rank_with_relative_threshold(reach.cast<std::complex<double>>(), tol) == n;
}

bool is_observable_kalman(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c, double tol) {
    return is_controllable_kalman(a.transpose(), c.transpose(), tol);
}

}  // namespace patternctl
