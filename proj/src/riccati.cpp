#include "patternctl/riccati.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "patternctl/linear_checks.hpp"

namespace patternctl {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

void require_square(const MatrixXd& m, const char* who) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(who) + ": matrix not square");
    }
}

void require_symmetric(const MatrixXd& m, const char* who) {
    const double scale = 1.0 + m.norm();
    if ((m - m.transpose()).norm() > 1e-10 * scale) {
        throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
    }
}

MatrixXd symmetrized(const MatrixXd& m) { return 0.5 * (m + m.transpose()); }

double spectral_abscissa(const MatrixXd& m) {
    Eigen::EigenSolver<MatrixXd> eig(m, false);
    return eig.eigenvalues().real().maxCoeff();
}

// Solve R^H Y + Y R = C with R upper triangular, column by column.
MatrixXcd solve_triangular_lyapunov(const MatrixXcd& r, const MatrixXcd& c) {
    const Index n = r.rows();
    MatrixXcd y = MatrixXcd::Zero(n, n);
    const MatrixXcd rh = r.adjoint();
    for (Index k = 0; k < n; ++k) {
        VectorXcd rhs = c.col(k);
        if (k > 0) rhs -= y.leftCols(k) * r.col(k).head(k);
        MatrixXcd lhs = rh;
        lhs.diagonal().array() += r(k, k);
        y.col(k) = lhs.triangularView<Eigen::Lower>().solve(rhs);
    }
    return y;
}

}  // namespace

Eigen::MatrixXd solve_lyapunov(const MatrixXd& m, const MatrixXd& rhs) {
    require_square(m, "solve_lyapunov");
    require_symmetric(rhs, "solve_lyapunov (rhs)");
    if (rhs.rows() != m.rows()) {
        throw std::invalid_argument("solve_lyapunov: dimension mismatch");
    }
    Eigen::ComplexSchur<MatrixXcd> schur(m.cast<std::complex<double>>());
    if (schur.info() != Eigen::Success) {
        throw std::runtime_error("solve_lyapunov: Schur decomposition failed");
    }
    const MatrixXcd& r = schur.matrixT();
    const MatrixXcd& u = schur.matrixU();
    const double max_real = r.diagonal().real().maxCoeff();
    if (max_real >= 0.0) {
        throw std::runtime_error("solve_lyapunov: coefficient matrix not Hurwitz (max Re = " +
                                 std::to_string(max_real) + ")");
    }
    const MatrixXcd c = u.adjoint() * rhs.cast<std::complex<double>>() * u;
    const MatrixXcd y = solve_triangular_lyapunov(r, c);
    return symmetrized((u * y * u.adjoint()).real());
}

double care_residual(const MatrixXd& a, const MatrixXd& b, const MatrixXd& q,
                     const MatrixXd& p) {
    const MatrixXd r = a.transpose() * p + p * a - p * b * b.transpose() * p + q;
    return r.norm() / (1.0 + p.norm());
}

Eigen::MatrixXd care_stabilizing(const MatrixXd& a, const MatrixXd& b, const MatrixXd& q,
                                 double rel_tol, int max_newton) {
    require_square(a, "care_stabilizing");
    require_symmetric(q, "care_stabilizing (Q)");
    if (b.rows() != a.rows()) {
        throw std::invalid_argument("care_stabilizing: B row count mismatch");
    }
    const Index n = a.rows();

    // Initial stabilizing gain. If A is already Hurwitz the zero gain works;
    // otherwise Bass: with beta above the spectral abscissa, the Gramian-type
    // solution Z of (A+beta I) Z + Z (A+beta I)^T = 2 B B^T is positive
    // definite exactly when (A, B) is controllable, and K0 = B^T Z^{-1}
    // stabilizes since (A - B K0) Z + Z (A - B K0)^T = -2 beta Z.
    MatrixXd k0 = MatrixXd::Zero(b.cols(), n);
    if (spectral_abscissa(a) >= 0.0) {
        const double beta = a.norm() + 1.0;
        const MatrixXd shifted = -(a + beta * MatrixXd::Identity(n, n)).transpose();
        const MatrixXd z = solve_lyapunov(shifted, -2.0 * b * b.transpose());
        Eigen::LDLT<MatrixXd> ldlt(z);
        if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
            ldlt.vectorD().minCoeff() <= 1e-12 * z.norm()) {
            throw std::runtime_error(
                "care_stabilizing: stabilization Gramian is singular; (A,B) is not "
                "stabilizable");
        }
        k0 = ldlt.solve(b).transpose();
    }

    // Kleinman-Newton. The full step solves the Lyapunov equation of the
    // current closed loop; halving steps are only needed far from the
    // solution.
    MatrixXd acl = a - b * k0;
    MatrixXd p = solve_lyapunov(acl, -symmetrized(q + k0.transpose() * k0));
    double res = care_residual(a, b, q, p);

    for (int iter = 0; iter < max_newton && res > rel_tol; ++iter) {
        acl = a - b * (b.transpose() * p);
        MatrixXd p_next;
        try {
            p_next = solve_lyapunov(acl, -symmetrized(q + p * b * b.transpose() * p));
        } catch (const std::runtime_error&) {
            throw std::runtime_error(
                "care_stabilizing: Newton iterate lost stabilizing property; no "
                "stabilizing solution exists (unobservable imaginary-axis mode?)");
        }
        bool accepted = false;
        double step = 1.0;
        for (int halvings = 0; halvings < 40; ++halvings) {
            const MatrixXd candidate = symmetrized(p + step * (p_next - p));
            const double candidate_res = care_residual(a, b, q, candidate);
            if (candidate_res < res) {
                p = candidate;
                res = candidate_res;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            if (res <= 1e-9) break;  // stagnated at roundoff level
            throw std::runtime_error(
                "care_stabilizing: Newton iteration diverged (residual stuck at " +
                std::to_string(res) + ")");
        }
    }
    if (res > std::max(rel_tol, 1e-9)) {
        throw std::runtime_error("care_stabilizing: residual " + std::to_string(res) +
                                 " did not converge below tolerance");
    }
    return symmetrized(p);
}

Eigen::MatrixXd unobservable_subspace(const MatrixXd& a, const MatrixXd& q, double tol) {
    require_square(a, "unobservable_subspace");
    require_square(q, "unobservable_subspace");
    const Index n = a.rows();

    Eigen::SelfAdjointEigenSolver<MatrixXd> es(symmetrized(q));
    const VectorXd lambda = es.eigenvalues();
    const double q_cut = tol * std::max(1.0, lambda.cwiseAbs().maxCoeff());
    Index kernel_dim = 0;
    while (kernel_dim < n && std::abs(lambda(kernel_dim)) <= q_cut) ++kernel_dim;
    MatrixXd basis = es.eigenvectors().leftCols(kernel_dim);

    // Shrink to the largest A-invariant subspace: keep directions v in the
    // current span with A v still in the span.
    while (basis.cols() > 0) {
        const MatrixXd leak = (a * basis) - basis * (basis.transpose() * a * basis);
        Eigen::JacobiSVD<MatrixXd> svd(leak, Eigen::ComputeFullV);
        const VectorXd sigma = svd.singularValues();
        const double cut = tol * std::max(1.0, a.norm());
        Index rank = 0;
        while (rank < sigma.size() && sigma(rank) > cut) ++rank;
        if (rank == 0) break;  // already invariant
        basis = basis * svd.matrixV().rightCols(basis.cols() - rank);
    }
    return basis;
}

CareSolution care_minimal(const MatrixXd& a, const MatrixXd& b, const MatrixXd& q,
                          const MatrixXd& neutral) {
    require_square(a, "care_minimal");
    const Index n = a.rows();
    const Index d = neutral.cols();

    CareSolution sol;
    if (d == 0) {
        sol.P = care_stabilizing(a, b, q);
        sol.residual_norm = care_residual(a, b, q, sol.P);
        return sol;
    }

    Eigen::HouseholderQR<MatrixXd> qr(neutral);
    const MatrixXd nrm_r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
    if (nrm_r.diagonal().cwiseAbs().minCoeff() <= 1e-12 * (1.0 + neutral.norm())) {
        throw std::invalid_argument("care_minimal: deflation directions are rank deficient");
    }
    const MatrixXd q_full = qr.householderQ() * MatrixXd::Identity(n, n);
    const MatrixXd nb = q_full.leftCols(d);       // orthonormal deflation basis
    const MatrixXd v = q_full.rightCols(n - d);   // orthonormal complement

    const double inv_leak = ((MatrixXd::Identity(n, n) - nb * nb.transpose()) * a * nb).norm();
    const double ker_leak = (q * nb).norm();
    const double guard = 1e-7 * (1.0 + a.norm() + q.norm());
    if (inv_leak > guard || ker_leak > guard) {
        throw std::invalid_argument(
            "care_minimal: deflation directions do not span an A-invariant subspace of "
            "ker Q (invariance leak " +
            std::to_string(inv_leak) + ", kernel leak " + std::to_string(ker_leak) + ")");
    }

    const MatrixXd a_r = v.transpose() * a * v;
    const MatrixXd b_r = v.transpose() * b;
    const MatrixXd q_r = symmetrized(v.transpose() * q * v);
    MatrixXd p_r;
    try {
        p_r = care_stabilizing(a_r, b_r, q_r);
    } catch (const std::runtime_error& err) {
        throw std::runtime_error(std::string("care_minimal: reduced CARE has no "
                                             "stabilizing solution (") +
                                 err.what() + ")");
    }

    sol.P = symmetrized(v * p_r * v.transpose());
    sol.residual_norm = care_residual(a, b, q, sol.P);
    sol.kernel_check = (sol.P * neutral).norm();
    if (sol.residual_norm > 1e-8) {
        throw std::runtime_error("care_minimal: embedded residual " +
                                 std::to_string(sol.residual_norm) +
                                 " above tolerance 1e-8");
    }
    return sol;
}

CareSolution care_minimal(const MatrixXd& a, const MatrixXd& b, const MatrixXd& q) {
    return care_minimal(a, b, q, unobservable_subspace(a, q));
}

CareSolution solve_care_minimal(const AugmentedSystem& sys, const Eigen::VectorXd& psi1) {
    if (psi1.size() != sys.size()) {
        throw std::invalid_argument("solve_care_minimal: psi1 length mismatch");
    }
    const double scale = 1.0 + psi1.norm();
    if ((sys.A * psi1).norm() > 1e-8 * scale * (1.0 + sys.A.norm()) ||
        (sys.Q * psi1).norm() > 1e-8 * scale * (1.0 + sys.Q.norm())) {
        throw std::invalid_argument(
            "solve_care_minimal: psi1 is not a joint null vector of A and Q "
            "(equilibrium or pattern assumption violated)");
    }
    CareSolution sol = care_minimal(sys.A, sys.B, sys.Q, psi1);
    sol.kernel_check = (sol.P * psi1).norm();
    return sol;
}

Eigen::MatrixXd solve_filter_are(const MatrixXd& a, const MatrixXd& c, int m) {
    require_square(a, "solve_filter_are");
    if (c.cols() != a.rows()) {
        throw std::invalid_argument("solve_filter_are: C column count mismatch");
    }
    if (m < 1) throw std::invalid_argument("solve_filter_are: m must be >= 1");
    if (!is_observable_pbh(a, c)) {
        throw std::runtime_error("solve_filter_are: (A, C) is not observable");
    }
    const Index k = a.rows();
    const MatrixXd p = care_stabilizing((m * a).transpose(), c.transpose(),
                                        MatrixXd::Identity(k, k));
    const double closed = spectral_abscissa(m * a - p * c.transpose() * c);
    if (closed >= 0.0) {
        throw std::runtime_error("solve_filter_are: filter loop not Hurwitz (max Re = " +
                                 std::to_string(closed) + ")");
    }
    return p;
}

}  // namespace patternctl
