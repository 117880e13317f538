#include <doctest.h>

#include <random>

#include "patternctl/centralized.hpp"
#include "patternctl/simulate.hpp"
#include "patternctl/spectral.hpp"
#include "support/study.hpp"

using test_study::grid_study;

TEST_SUITE_BEGIN("centralized");

TEST_CASE("grid study synthesis invariants") {
    const auto& study = grid_study();
    const auto& d = study.design;
    CHECK(d.care_residual <= 1e-8);
    CHECK(d.kernel_norm <= 1e-8);
    CHECK((d.closed_loop * d.psi1).norm() < 1e-8);
    CHECK((d.psi1_hat.transpose() * d.closed_loop).norm() < 1e-8);
    CHECK(std::abs(d.psi1_hat.dot(d.psi1) - 1.0) < 1e-10);
    // steady control vanishes on the engineered mode although u* does not
    CHECK((d.gain * d.psi1).norm() < 1e-8);
    CHECK(d.psi1.tail(7).norm() > 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.P);
    CHECK(es.eigenvalues().minCoeff() >= -1e-9);
}

TEST_CASE("grid study certificate") {
    const auto cert = patternctl::certify_spectrum(grid_study().design);
    CHECK(cert.pass);
    CHECK(cert.zero_count == 1);
    CHECK(cert.max_other_real_part < -1e-6);
    CHECK(cert.p_kernel_norm <= 1e-8);

    // mode count split: one marginal, fifteen strictly stable
    const auto pairs = patternctl::eig_full(grid_study().design.closed_loop);
    int zero_modes = 0;
    int stable_modes = 0;
    const double threshold = 1e-8 * patternctl::operator_norm(grid_study().design.closed_loop);
    for (int i = 0; i < 16; ++i) {
        if (std::abs(pairs.values(i)) <= threshold) {
            ++zero_modes;
        } else if (pairs.values(i).real() < -1e-6) {
            ++stable_modes;
        }
    }
    CHECK(zero_modes == 1);
    CHECK(stable_modes == 15);
}

TEST_CASE("certificate rejects the open loop") {
    const auto& study = grid_study();
    // without feedback the integrator block keeps m marginal modes and the
    // shifted Laplacian has unstable ones
    const auto cert =
        patternctl::certify_spectrum(study.sys.A, study.design.P, study.design.psi1);
    CHECK_FALSE(cert.pass);
    CHECK(cert.zero_count > 1);
    CHECK(cert.max_other_real_part > 0.0);
}

TEST_CASE("scalar chain: zero cost gives the drift as closed loop") {
    const patternctl::Graph single(1, {});
    const patternctl::PatternSpec spec(Eigen::VectorXd::Ones(1));
    const patternctl::PlantModel plant(single, -1.0, {1});
    const Eigen::MatrixXd q = patternctl::pattern_matrix(single, spec);  // 0, no edges
    const auto sys = patternctl::build_augmented(plant, q);
    const auto eq = patternctl::solve_equilibrium(plant, spec);
    REQUIRE(eq.feasible);
    CHECK(eq.equilibrium.u_star(0) == doctest::Approx(1.0));
    const auto design = patternctl::synthesize_centralized(sys, eq.equilibrium);
    CHECK(design.P.norm() < 1e-12);  // free motion costs nothing here
    const auto cert = patternctl::certify_spectrum(design);
    CHECK(cert.pass);
    CHECK(cert.max_other_real_part == doctest::Approx(-1.0));
    // the pattern mode is x = z: the limit keeps the initial integrator value
    Eigen::VectorXd w0(2);
    w0 << 5.0, 2.0;
    const Eigen::VectorXd limit = patternctl::predict_limit(design, w0);
    CHECK(limit(0) == doctest::Approx(2.0));
    CHECK(limit(1) == doctest::Approx(2.0));
}

TEST_CASE("basin membership") {
    const auto& study = grid_study();
    SUBCASE("psi1 itself sits exactly at the p0 = 1 threshold") {
        const auto at_threshold =
            patternctl::in_basin(study.design, study.design.psi1, study.spec);
        CHECK(at_threshold.projection == doctest::Approx(1.0));
        CHECK(at_threshold.threshold == doctest::Approx(1.0));
        CHECK_FALSE(at_threshold.inside);  // strict inequality
        const patternctl::PatternSpec smaller(study.spec.alpha, 0.5);
        CHECK(patternctl::in_basin(study.design, study.design.psi1, smaller).inside);
    }
    SUBCASE("projected-out initial states are never members") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> box(-5.0, 5.0);
        for (int trial = 0; trial < 5; ++trial) {
            Eigen::VectorXd w(16);
            for (int i = 0; i < 16; ++i) w(i) = box(rng);
            w -= study.design.psi1_hat.dot(w) * study.design.psi1;
            CHECK_FALSE(patternctl::in_basin(study.design, w, study.spec).inside);
        }
    }
    SUBCASE("the published initial condition is inside") {
        CHECK(patternctl::in_basin(study.design, study.xbar0, study.spec).inside);
    }
}

TEST_CASE("limit prediction is the rank-one spectral projector") {
    const auto& study = grid_study();
    CHECK((patternctl::predict_limit(study.design, study.design.psi1) - study.design.psi1)
              .norm() < 1e-10);
    CHECK(patternctl::predict_limit(study.design, Eigen::VectorXd::Zero(16)).norm() == 0.0);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> box(-5.0, 5.0);
    Eigen::VectorXd u(16), v(16);
    for (int i = 0; i < 16; ++i) {
        u(i) = box(rng);
        v(i) = box(rng);
    }
    // linearity
    const Eigen::VectorXd lhs = patternctl::predict_limit(study.design, 2.0 * u - 3.0 * v);
    const Eigen::VectorXd rhs = 2.0 * patternctl::predict_limit(study.design, u) -
                                3.0 * patternctl::predict_limit(study.design, v);
    CHECK((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
    // idempotence
    const Eigen::VectorXd once = patternctl::predict_limit(study.design, u);
    CHECK((patternctl::predict_limit(study.design, once) - once).norm() <
          1e-9 * (1.0 + once.norm()));
}

TEST_CASE("limits of simulated trajectories match the predictor") {
    const auto& study = grid_study();
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> box(-5.0, 5.0);
    patternctl::SimulateOptions opts;
    opts.dt = 1e-3;
    int inside_runs = 0;
    while (inside_runs < 15) {
        Eigen::VectorXd w0(16);
        for (int i = 0; i < 16; ++i) w0(i) = box(rng);
        if (!patternctl::in_basin(study.design, w0, study.spec).inside) continue;
        ++inside_runs;
        const auto record = patternctl::simulate_centralized(study.design, w0, opts);
        REQUIRE(record.converged);
        const Eigen::VectorXd predicted = patternctl::predict_limit(study.design, w0);
        CHECK((record.limit_estimate - predicted).norm() <= 1e-5 * predicted.norm());
        CHECK(patternctl::is_in_pattern(record.limit_estimate.head(9), study.graph,
                                        study.spec));
    }
}

TEST_CASE("zero-projection initial states decay to the origin") {
    const auto& study = grid_study();
    const auto cert = patternctl::certify_spectrum(study.design);
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> box(-5.0, 5.0);
    patternctl::SimulateOptions opts;
    opts.dt = 1e-3;
    // long enough for the slowest stable mode to push ||w|| under 1e-7
    opts.t_end = std::max(20.0, std::log(20.0 / 1e-7) / -cert.max_other_real_part);
    for (int trial = 0; trial < 4; ++trial) {
        Eigen::VectorXd w0(16);
        for (int i = 0; i < 16; ++i) w0(i) = box(rng);
        w0 -= study.design.psi1_hat.dot(w0) * study.design.psi1;
        const auto record = patternctl::simulate_centralized(study.design, w0, opts);
        CHECK(record.limit_estimate.norm() < 1e-6);
    }
}

TEST_CASE("non-detectability witness on the augmented data") {
    const auto& study = grid_study();
    const Eigen::VectorXd& psi1 = study.design.psi1;
    CHECK(psi1.norm() > 0.0);
    CHECK((study.sys.A * psi1).norm() < 1e-10 * (1.0 + psi1.norm()));
    CHECK((study.sys.Q * psi1).norm() < 1e-10 * (1.0 + psi1.norm()));
}

TEST_CASE("the 7x7 stripe is not a Laplacian eigenvector") {
    const patternctl::Graph g = patternctl::Graph::grid(7, 7);
    Eigen::VectorXd alt(7);
    alt << 1, -1, 1, -1, 1, -1, 1;
    const Eigen::VectorXd stripe = patternctl::sign_kron(alt, Eigen::VectorXd::Ones(7));
    const Eigen::MatrixXd lap = g.laplacian();
    const double best_lambda = stripe.dot(lap * stripe) / stripe.squaredNorm();
    CHECK((lap * stripe - best_lambda * stripe).norm() > 0.1);
}

TEST_SUITE_END();
