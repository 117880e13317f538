#pragma once

#include <Eigen/Dense>

#include "patternctl/plant.hpp"

namespace patternctl {

// Continuous Lyapunov equation  M^T T + T M = rhs  (Bartels-Stewart on the
// complex Schur form of M). M must be Hurwitz and rhs symmetric; the solution
// is symmetric, and positive definite whenever rhs is negative definite.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& m, const Eigen::MatrixXd& rhs);

// Relative Frobenius residual of A^T P + P A - P B B^T P + Q, scaled by
// 1 + ||P||_F.
double care_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                     const Eigen::MatrixXd& q, const Eigen::MatrixXd& p);

// Stabilizing solution of the CARE  A^T P + P A - P B B^T P + Q = 0.
// Kleinman-Newton iteration started from a Bass stabilizing gain; each step
// is damped by halving until the residual decreases, and divergence is an
// error, never a silent return. Requires (A, B) stabilizable and no
// unobservable imaginary-axis mode in (Q, A).
Eigen::MatrixXd care_stabilizing(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                 const Eigen::MatrixXd& q, double rel_tol = 1e-11,
                                 int max_newton = 50);

// Orthonormal basis of the largest A-invariant subspace contained in ker Q
// (the (Q, A)-unobservable subspace). Returns an n x d matrix, d possibly 0.
Eigen::MatrixXd unobservable_subspace(const Eigen::MatrixXd& a, const Eigen::MatrixXd& q,
                                      double tol = 1e-9);

struct CareSolution {
    Eigen::MatrixXd P;
    double residual_norm = 0.0;  // relative Frobenius residual
    double kernel_check = 0.0;   // ||P * deflated directions||
};

// Smallest positive semi-definite CARE solution. The columns of `neutral`
// must span an A-invariant subspace inside ker Q; the cost of running inside
// that subspace is zero, so the minimal solution vanishes on it. We deflate
// it analytically, solve the reduced CARE (whose pair has no imaginary-axis
// unobservable modes left) for its stabilizing solution, and embed back.
// This sidesteps ordered-Schur selection at the imaginary axis entirely.
CareSolution care_minimal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          const Eigen::MatrixXd& q, const Eigen::MatrixXd& neutral);

// Same, detecting the unobservable subspace itself. With an observable pair
// this degenerates to the plain stabilizing solution.
CareSolution care_minimal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          const Eigen::MatrixXd& q);

// Pattern-pipeline entry point: deflates the engineered zero mode psi1
// (which must satisfy A psi1 = 0 and Q psi1 = 0 up to roundoff).
CareSolution solve_care_minimal(const AugmentedSystem& sys, const Eigen::VectorXd& psi1);

// Filter Riccati  m A P + m P A^T - P C^T C P + I = 0, solved through its
// dual control CARE. Requires (A, C) observable; the result is symmetric
// positive definite and m A - P C^T C is Hurwitz.
Eigen::MatrixXd solve_filter_are(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c, int m);

}  // namespace patternctl
