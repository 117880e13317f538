#pragma once

#include <Eigen/Dense>

#include "patternctl/pattern.hpp"
#include "patternctl/plant.hpp"
#include "patternctl/riccati.hpp"

namespace patternctl {

// Everything the centralized loop needs, frozen after synthesis:
// the minimal PSD Riccati solution P, the feedback v = -B^T P xbar, the
// closed loop Atilde = A - B B^T P, and the zero eigenpair. psi1 = [x*; u*]
// spans the engineered marginal mode; psi1_hat is the matching left null
// vector normalized so psi1_hat^T psi1 = 1, which makes psi1 psi1_hat^T the
// spectral projector every limit passes through.
struct CentralizedDesign {
    AugmentedSystem sys;
    Eigen::MatrixXd P;
    Eigen::MatrixXd gain;         // B^T P, one row per leader
    Eigen::MatrixXd closed_loop;  // A - B B^T P
    Eigen::VectorXd psi1;
    Eigen::VectorXd psi1_hat;
    double care_residual = 0.0;
    double kernel_norm = 0.0;  // ||P psi1||
};

CentralizedDesign synthesize_centralized(const AugmentedSystem& sys, const Equilibrium& eq);

// Spectral certificate: exactly one eigenvalue at zero (|lambda| below
// zero_threshold), every other real part below -hurwitz_margin, and
// ||P psi1|| under kernel_tol.
struct SpectralCertificate {
    int zero_count = 0;
    double max_other_real_part = 0.0;
    double p_kernel_norm = 0.0;
    double zero_threshold = 0.0;
    bool pass = false;
};

SpectralCertificate certify_spectrum(const Eigen::MatrixXd& closed_loop,
                                     const Eigen::MatrixXd& p, const Eigen::VectorXd& psi1,
                                     double zero_rel_tol = 1e-8,
                                     double hurwitz_margin = 1e-6,
                                     double kernel_tol = 1e-8);
SpectralCertificate certify_spectrum(const CentralizedDesign& design,
                                     double zero_rel_tol = 1e-8,
                                     double hurwitz_margin = 1e-6,
                                     double kernel_tol = 1e-8);

// Basin verdict with the margin spelled out so near-misses can be explained:
// inside iff |psi1_hat^T xbar0| > p0 sqrt(n) / ||x*||.
struct BasinCheck {
    bool inside = false;
    double projection = 0.0;  // |psi1_hat^T xbar0| (plus observer term if any)
    double threshold = 0.0;
    double margin = 0.0;      // projection - threshold
};

BasinCheck in_basin(const CentralizedDesign& design, const Eigen::VectorXd& xbar0,
                    const PatternSpec& spec);

// Theorem-limit predictor: (psi1_hat^T xbar0) psi1.
Eigen::VectorXd predict_limit(const CentralizedDesign& design, const Eigen::VectorXd& xbar0);

}  // namespace patternctl
