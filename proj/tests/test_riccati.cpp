#include <doctest.h>

#include <random>

#include "patternctl/linear_checks.hpp"
#include "patternctl/riccati.hpp"
#include "patternctl/spectral.hpp"
#include "support/oracles.hpp"

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd scalar(double v) { return MatrixXd::Constant(1, 1, v); }

MatrixXd random_hurwitz(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = gauss(rng);
    }
    // shift left of the spectral abscissa
    const double shift = patternctl::spectral_abscissa(m);
    m -= (shift + 0.5 + std::abs(gauss(rng))) * MatrixXd::Identity(n, n);
    return m;
}

MatrixXd random_spd(std::mt19937_64& rng, int n, double ridge = 0.1) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixXd g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
    }
    return g * g.transpose() + ridge * MatrixXd::Identity(n, n);
}

}  // namespace

TEST_SUITE_BEGIN("numerics");

TEST_CASE("lyapunov: closed forms") {
    CHECK(patternctl::solve_lyapunov(scalar(-1.0), scalar(-1.0))(0, 0) ==
          doctest::Approx(0.5));
    MatrixXd m = MatrixXd::Zero(2, 2);
    m(0, 0) = -1.0;
    m(1, 1) = -2.0;
    const MatrixXd t = patternctl::solve_lyapunov(m, -MatrixXd::Identity(2, 2));
    CHECK(t(0, 0) == doctest::Approx(0.5));
    CHECK(t(1, 1) == doctest::Approx(0.25));
    CHECK(std::abs(t(0, 1)) < 1e-14);
}

TEST_CASE("lyapunov: rejects non-Hurwitz coefficients") {
    CHECK_THROWS_AS(patternctl::solve_lyapunov(scalar(0.0), scalar(-1.0)),
                    std::runtime_error);
    CHECK_THROWS_AS(patternctl::solve_lyapunov(scalar(0.3), scalar(-1.0)),
                    std::runtime_error);
}

TEST_CASE("lyapunov: residual and positivity on random Hurwitz instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> size(1, 8);
        const int n = size(rng);
        const MatrixXd m = random_hurwitz(rng, n);
        const MatrixXd rhs = -random_spd(rng, n);
        const MatrixXd t = patternctl::solve_lyapunov(m, rhs);
        CHECK((m.transpose() * t + t * m - rhs).norm() <= 1e-10 * (1.0 + t.norm()));
        CHECK((t - t.transpose()).norm() < 1e-12 * (1.0 + t.norm()));
        Eigen::LLT<MatrixXd> llt(t);
        CHECK(llt.info() == Eigen::Success);  // negative definite rhs => T > 0
    }
}

TEST_CASE("lyapunov matches the quadrature oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        std::uniform_int_distribution<int> size(1, 2);
        const int n = size(rng);
        const MatrixXd m = random_hurwitz(rng, n);
        const MatrixXd rhs = -random_spd(rng, n);
        const MatrixXd t = patternctl::solve_lyapunov(m, rhs);
        const double slowest = std::abs(patternctl::spectral_abscissa(m));
        const MatrixXd t_quad =
            test_oracles::lyapunov_quadrature_oracle(m, rhs, 40.0 / slowest, 20000);
        CHECK((t - t_quad).norm() <= 1e-6 * (1.0 + t.norm()));
    }
}

TEST_CASE("care: scalar closed forms") {
    SUBCASE("A=0, B=1, Q=1 -> P=1") {
        const auto sol = patternctl::care_minimal(scalar(0.0), scalar(1.0), scalar(1.0));
        CHECK(sol.P(0, 0) == doctest::Approx(1.0));
        CHECK(sol.residual_norm < 1e-10);
    }
    SUBCASE("A=1, B=1, Q=0 -> minimal solution picks 0, not the stabilizing 2") {
        const auto sol = patternctl::care_minimal(scalar(1.0), scalar(1.0), scalar(0.0));
        CHECK(std::abs(sol.P(0, 0)) < 1e-12);
        const MatrixXd stab = patternctl::care_stabilizing(scalar(1.0), scalar(1.0), scalar(0.0));
        CHECK(stab(0, 0) == doctest::Approx(2.0));
    }
}

TEST_CASE("care: agrees with the Hamiltonian oracle on observable instances") {
    std::mt19937_64 rng(19);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int done = 0;
    while (done < 20) {
        std::uniform_int_distribution<int> size(1, 6);
        const int n = size(rng);
        MatrixXd a(n, n);
        MatrixXd b(n, 1 + (done % 2));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
            for (int j = 0; j < b.cols(); ++j) b(i, j) = gauss(rng);
        }
        const MatrixXd q = random_spd(rng, n);  // PD => observable
        MatrixXd oracle;
        try {
            oracle = test_oracles::care_stabilizing_oracle(a, b, q);
        } catch (const std::runtime_error&) {
            continue;  // eigenvalues straddling the axis; redraw
        }
        const auto sol = patternctl::care_minimal(a, b, q);
        CHECK((sol.P - oracle).norm() <= 1e-8 * (1.0 + oracle.norm()));
        CHECK(sol.residual_norm <= 1e-10);
        ++done;
    }
}

TEST_CASE("care: minimality against enumerated Hamiltonian solutions") {
    std::mt19937_64 rng(29);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int done = 0;
    int multi_solution_instances = 0;
    while (done < 14) {
        const int n = 2 + (done % 2);  // 2- and 3-state instances
        MatrixXd a(n, n);
        MatrixXd b(n, 1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
            b(i, 0) = gauss(rng);
        }
        // Half the instances get a rank-deficient cost, which is what makes
        // several PSD solutions possible at all.
        MatrixXd q;
        if (done % 2 == 0) {
            Eigen::VectorXd c(n);
            for (int i = 0; i < n; ++i) c(i) = gauss(rng);
            q = c * c.transpose();
        } else {
            q = random_spd(rng, n);
        }
        if (!patternctl::is_controllable_pbh(a, b)) continue;

        std::vector<MatrixXd> all;
        MatrixXd p_min;
        try {
            all = test_oracles::care_psd_solutions_oracle(a, b, q);
            p_min = patternctl::care_minimal(a, b, q).P;
        } catch (const std::exception&) {
            continue;  // degenerate draw (imaginary-axis Hamiltonian modes)
        }
        if (all.empty()) continue;
        if (all.size() > 1) ++multi_solution_instances;
        for (const MatrixXd& p : all) {
            Eigen::SelfAdjointEigenSolver<MatrixXd> es(p - p_min);
            CHECK(es.eigenvalues().minCoeff() >= -1e-8 * (1.0 + p.norm()));
        }
        ++done;
    }
    CHECK(multi_solution_instances >= 1);  // the probe actually exercised "smallest"
}

TEST_CASE("unobservable subspace detection") {
    SUBCASE("zero cost makes everything unobservable") {
        const MatrixXd basis =
            patternctl::unobservable_subspace(MatrixXd::Identity(3, 3), MatrixXd::Zero(3, 3));
        CHECK(basis.cols() == 3);
    }
    SUBCASE("positive definite cost leaves nothing") {
        std::mt19937_64 rng(3);
        const MatrixXd basis =
            patternctl::unobservable_subspace(random_hurwitz(rng, 4), MatrixXd::Identity(4, 4));
        CHECK(basis.cols() == 0);
    }
    SUBCASE("invariant kernel direction is found") {
        // A diagonal, Q blind to the first coordinate only.
        MatrixXd a = MatrixXd::Zero(2, 2);
        a(0, 0) = 1.0;
        a(1, 1) = -2.0;
        MatrixXd q = MatrixXd::Zero(2, 2);
        q(1, 1) = 1.0;
        const MatrixXd basis = patternctl::unobservable_subspace(a, q);
        REQUIRE(basis.cols() == 1);
        CHECK(std::abs(basis(0, 0)) == doctest::Approx(1.0));
        CHECK(std::abs(basis(1, 0)) < 1e-12);
    }
}

TEST_CASE("filter riccati") {
    SUBCASE("scalar: P=1 with closed pole at -1") {
        const MatrixXd p = patternctl::solve_filter_are(scalar(0.0), scalar(1.0), 1);
        CHECK(p(0, 0) == doctest::Approx(1.0));
        CHECK(patternctl::spectral_abscissa(scalar(0.0) - p) == doctest::Approx(-1.0));
    }
    SUBCASE("residual on random observable instances") {
        std::mt19937_64 rng(37);
        std::normal_distribution<double> gauss(0.0, 1.0);
        int done = 0;
        while (done < 12) {
            std::uniform_int_distribution<int> size(2, 10);
            std::uniform_int_distribution<int> mdist(1, 4);
            const int k = size(rng);
            const int m = mdist(rng);
            MatrixXd a(k, k);
            MatrixXd c(2, k);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) a(i, j) = gauss(rng);
                c(0, i) = gauss(rng);
                c(1, i) = gauss(rng);
            }
            if (!patternctl::is_observable_pbh(a, c)) continue;
            const MatrixXd p = patternctl::solve_filter_are(a, c, m);
            const MatrixXd residual = m * a * p + m * p * a.transpose() -
                                      p * c.transpose() * c * p +
                                      MatrixXd::Identity(k, k);
            CHECK(residual.norm() <= 1e-8 * (1.0 + p.norm()));
            Eigen::LLT<MatrixXd> llt(p);
            CHECK(llt.info() == Eigen::Success);
            CHECK(patternctl::spectral_abscissa(m * a - p * c.transpose() * c) < -1e-6);
            ++done;
        }
    }
    SUBCASE("rejects unobservable pairs") {
        CHECK_THROWS_AS(patternctl::solve_filter_are(MatrixXd::Identity(2, 2),
                                                     MatrixXd::Zero(1, 2), 1),
                        std::runtime_error);
    }
}

TEST_CASE("eig_full") {
    SUBCASE("identity") {
        const auto pairs = patternctl::eig_full(MatrixXd::Identity(3, 3));
        for (int i = 0; i < 3; ++i) {
            CHECK(pairs.values(i).real() == doctest::Approx(1.0));
            CHECK(std::abs(pairs.values(i).imag()) < 1e-12);
        }
        CHECK(pairs.well_conditioned);
    }
    SUBCASE("Jordan block raises the defective flag") {
        MatrixXd j = MatrixXd::Zero(2, 2);
        j(0, 1) = 1.0;
        const auto pairs = patternctl::eig_full(j);
        CHECK_FALSE(pairs.well_conditioned);
        CHECK(pairs.left.size() == 0);
    }
    SUBCASE("left and right eigenvectors are binormalized") {
        std::mt19937_64 rng(43);
        const MatrixXd m = random_hurwitz(rng, 5);
        const auto pairs = patternctl::eig_full(m);
        REQUIRE(pairs.well_conditioned);
        const Eigen::MatrixXcd mc = m.cast<std::complex<double>>();
        for (int i = 0; i < 5; ++i) {
            const Eigen::VectorXcd r = pairs.right.col(i);
            const Eigen::VectorXcd l = pairs.left.col(i);
            CHECK((mc * r - pairs.values(i) * r).norm() < 1e-9 * (1.0 + r.norm()));
            CHECK((l.transpose() * mc - pairs.values(i) * l.transpose()).norm() <
                  1e-9 * (1.0 + l.norm()));
            for (int j = 0; j < 5; ++j) {
                const std::complex<double> dot = l.transpose() * pairs.right.col(j);
                CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-9);
            }
        }
    }
}

TEST_SUITE_END();
