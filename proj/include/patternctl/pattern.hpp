#pragma once

#include <Eigen/Dense>

#include "patternctl/graph.hpp"

namespace patternctl {

// A two-level sign pattern on a graph: target direction alpha (entries +-1)
// and the minimum per-vertex magnitude p0 that counts as "pattern formed".
struct PatternSpec {
    Eigen::VectorXd alpha;
    double p0 = 1.0;

    PatternSpec(Eigen::VectorXd alpha_in, double p0_in = 1.0);
};

// Edges split by whether the endpoint target signs disagree (sign_flip) or
// agree (sign_keep). Together they partition the edge set.
struct EdgePartition {
    std::vector<Graph::Edge> sign_flip;
    std::vector<Graph::Edge> sign_keep;
};

// Kronecker product of two sign vectors; rejects entries other than +-1.
Eigen::VectorXd sign_kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

EdgePartition partition_edges(const Graph& g, const PatternSpec& spec);

// Q = D + A_flip - A_keep: symmetric PSD, annihilates alpha, and (for a
// connected graph) has kernel exactly span{alpha}. States far enough from the
// origin inside its kernel are precisely the pattern states.
Eigen::MatrixXd pattern_matrix(const Graph& g, const PatternSpec& spec);

// Membership test: ||Q x|| <= tol * ||x|| and ||x|| >= p0 * sqrt(n). The
// relative kernel test keeps the verdict scale-invariant. Caller is expected
// to have checked connectivity; on disconnected graphs the kernel is wider
// than span{alpha} and this accepts states outside the pattern.
bool is_in_pattern(const Eigen::VectorXd& x, const Graph& g, const PatternSpec& spec,
                   double tol = 1e-6);

}  // namespace patternctl
