#include <doctest.h>

#include <random>

#include "patternctl/linear_checks.hpp"
#include "patternctl/plant.hpp"
#include "support/generators.hpp"

using patternctl::AugmentedSystem;
using patternctl::Graph;
using patternctl::PatternSpec;
using patternctl::PlantModel;

namespace {

Eigen::VectorXd stripe_alpha() {
    Eigen::VectorXd alpha(9);
    alpha << 1, 1, 1, -1, -1, -1, 1, 1, 1;
    return alpha;
}

PlantModel grid_plant(double a) {
    return PlantModel(Graph::grid(3, 3), a, {3, 2, 1, 4, 7, 8, 9});
}

}  // namespace

TEST_SUITE_BEGIN("plant");

TEST_CASE("plant validation") {
    const Graph g = Graph::grid(2, 2);
    CHECK_THROWS_AS(PlantModel(g, 1.0, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PlantModel(g, 1.0, {5}), std::invalid_argument);
    CHECK_NOTHROW(PlantModel(g, 1.0, {}));  // leaderless plant is diagnosable
    const PlantModel p(g, 1.0, {4, 2});
    const Eigen::MatrixXd b = p.input_matrix();
    CHECK(b.rows() == 4);
    CHECK(b.cols() == 2);
    CHECK(b(3, 0) == 1.0);
    CHECK(b(1, 1) == 1.0);
    CHECK(b.sum() == 2.0);
}

TEST_CASE("augmented blocks") {
    SUBCASE("single edge, leader at vertex 1, a = 0") {
        const PlantModel p(Graph(2, {{1, 2}}), 0.0, {1});
        const AugmentedSystem sys =
            patternctl::build_augmented(p, Eigen::MatrixXd::Zero(2, 2));
        Eigen::MatrixXd expected(3, 3);
        expected << -1, 1, 1, 1, -1, 0, 0, 0, 0;
        CHECK((sys.A - expected).norm() == 0.0);
        CHECK(sys.B.rows() == 3);
        CHECK(sys.B.cols() == 1);
        CHECK(sys.B(2, 0) == 1.0);
    }
    SUBCASE("input block structure: unit entries in the last m rows only") {
        const PlantModel p = grid_plant(4.0);
        const AugmentedSystem sys =
            patternctl::build_augmented(p, patternctl::pattern_matrix(p.graph, PatternSpec(stripe_alpha())));
        CHECK(sys.B.topRows(9).norm() == 0.0);
        CHECK((sys.B.bottomRows(7) - Eigen::MatrixXd::Identity(7, 7)).norm() == 0.0);
    }
    SUBCASE("cost matrix ignores integrator coordinates") {
        const PlantModel p = grid_plant(4.0);
        const AugmentedSystem sys =
            patternctl::build_augmented(p, patternctl::pattern_matrix(p.graph, PatternSpec(stripe_alpha())));
        Eigen::VectorXd w = Eigen::VectorXd::Zero(16);
        w.tail(7).setConstant(3.5);
        CHECK((sys.Q * w).norm() == 0.0);
    }
    SUBCASE("dimension mismatch") {
        const PlantModel p = grid_plant(4.0);
        CHECK_THROWS_AS(patternctl::build_augmented(p, Eigen::MatrixXd::Zero(4, 4)),
                        std::invalid_argument);
    }
}

TEST_CASE("equilibrium on the grid stripe") {
    const PatternSpec spec(stripe_alpha());
    SUBCASE("a = 4 is feasible with u* = [-2,-2,-2,0,-2,-2,-2]") {
        const auto res = patternctl::solve_equilibrium(grid_plant(4.0), spec);
        REQUIRE(res.feasible);
        Eigen::VectorXd expected(7);
        expected << -2, -2, -2, 0, -2, -2, -2;
        CHECK((res.equilibrium.u_star - expected).norm() < 1e-12);
        CHECK((res.equilibrium.x_star - spec.alpha).norm() == 0.0);
        // the defining identity of the equilibrium
        const PlantModel p = grid_plant(4.0);
        const Eigen::VectorXd closure =
            p.drift_matrix() * res.equilibrium.x_star + p.input_matrix() * res.equilibrium.u_star;
        CHECK(closure.norm() <= 1e-10 * (1.0 + res.equilibrium.x_star.norm()));
    }
    SUBCASE("a = 0 blocks on follower 5 with residual -4") {
        const auto res = patternctl::solve_equilibrium(grid_plant(0.0), spec);
        REQUIRE_FALSE(res.feasible);
        REQUIRE(res.blocking_followers == std::vector<int>{5, 6});
        CHECK(res.blocking_residuals[0] == doctest::Approx(-4.0));
    }
    SUBCASE("all vertices leaders is always feasible") {
        const PlantModel p(Graph::grid(3, 3), 0.7, {1, 2, 3, 4, 5, 6, 7, 8, 9});
        const auto res = patternctl::solve_equilibrium(p, spec);
        REQUIRE(res.feasible);
        const Eigen::VectorXd expected =
            p.graph.laplacian() * spec.alpha - 0.7 * spec.alpha;
        CHECK((res.equilibrium.u_star - expected).norm() < 1e-12);
    }
}

TEST_CASE("equilibrium is leader-order-invariant") {
    const PatternSpec spec(stripe_alpha());
    const auto res_a = patternctl::solve_equilibrium(grid_plant(4.0), spec);
    const PlantModel permuted(Graph::grid(3, 3), 4.0, {9, 8, 7, 4, 1, 2, 3});
    const auto res_b = patternctl::solve_equilibrium(permuted, spec);
    REQUIRE(res_a.feasible);
    REQUIRE(res_b.feasible);
    // same vertex -> same steady input, independent of list position
    CHECK(res_b.equilibrium.u_star(0) == res_a.equilibrium.u_star(6));  // vertex 9
    CHECK(res_b.equilibrium.u_star(3) == res_a.equilibrium.u_star(3));  // vertex 4
    CHECK(res_b.equilibrium.u_star(4) == res_a.equilibrium.u_star(2));  // vertex 1
}

TEST_CASE("assumption report") {
    const PatternSpec spec(stripe_alpha());
    const Eigen::MatrixXd q = patternctl::pattern_matrix(Graph::grid(3, 3), spec);
    SUBCASE("study setup passes everything") {
        const auto report = patternctl::check_assumptions(grid_plant(4.0), q);
        CHECK(report.graph_connected);
        CHECK(report.plant_controllable);
        CHECK(report.plant_observable);
        CHECK(report.augmented_controllable);
        CHECK(report.all_pass());
    }
    SUBCASE("no leaders, no controllability") {
        const PlantModel p(Graph::grid(3, 3), 4.0, {});
        const auto report = patternctl::check_assumptions(p, q);
        CHECK_FALSE(report.plant_controllable);
        CHECK_FALSE(report.all_pass());
    }
    SUBCASE("complete control of K2") {
        const Graph k2(2, {{1, 2}});
        const PlantModel p(k2, 1.3, {1, 2});
        const auto report =
            patternctl::check_assumptions(p, patternctl::pattern_matrix(k2, PatternSpec(Eigen::VectorXd::Ones(2))));
        CHECK(report.plant_controllable);
        CHECK(report.augmented_controllable);
    }
}

TEST_CASE("PBH and Kalman rank tests agree on random instances") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> size(1, 8);
        const int n = size(rng);
        std::uniform_int_distribution<int> inputs(0, 2);
        const int m = inputs(rng);
        Eigen::MatrixXd a(n, n);
        Eigen::MatrixXd b(n, m);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
            for (int j = 0; j < m; ++j) b(i, j) = gauss(rng);
        }
        // occasionally plant an uncontrollable direction
        if (trial % 3 == 0 && m > 0) b.col(0).setZero();
        CHECK(patternctl::is_controllable_pbh(a, b) ==
              patternctl::is_controllable_kalman(a, b));
    }
}

TEST_CASE("psi1 = [x*; u*] is a joint null vector of the augmented data") {
    std::mt19937_64 rng(59);
    int produced = 0;
    while (produced < 10) {
        const auto inst = test_generators::random_feasible_instance(rng, 8);
        if (!inst) continue;
        ++produced;
        const PatternSpec spec(inst->alpha);
        const PlantModel plant(inst->graph, inst->a, inst->leaders);
        const auto eq = patternctl::solve_equilibrium(plant, spec);
        REQUIRE(eq.feasible);
        const AugmentedSystem sys = patternctl::build_augmented(
            plant, patternctl::pattern_matrix(inst->graph, spec));
        Eigen::VectorXd psi1(sys.size());
        psi1 << eq.equilibrium.x_star, eq.equilibrium.u_star;
        CHECK((sys.A * psi1).norm() < 1e-10 * (1.0 + psi1.norm()));
        CHECK((sys.Q * psi1).norm() < 1e-10 * (1.0 + psi1.norm()));
        CHECK(psi1.norm() > 0.0);
    }
}

TEST_SUITE_END();
