#include "patternctl/pattern.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace patternctl {

namespace {

bool is_sign_vector(const Eigen::VectorXd& v) {
    return (v.array().abs() == 1.0).all();
}

}  // namespace

PatternSpec::PatternSpec(Eigen::VectorXd alpha_in, double p0_in)
    : alpha(std::move(alpha_in)), p0(p0_in) {
    if (!is_sign_vector(alpha)) {
        throw std::invalid_argument("PatternSpec: alpha entries must be exactly +1 or -1");
    }
    if (!(p0 > 0.0)) {
        throw std::invalid_argument("PatternSpec: p0 must be positive, got " +
                                    std::to_string(p0));
    }
}

Eigen::VectorXd sign_kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (!is_sign_vector(a) || !is_sign_vector(b)) {
        throw std::invalid_argument("sign_kron: entries must be exactly +1 or -1");
    }
    Eigen::VectorXd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

EdgePartition partition_edges(const Graph& g, const PatternSpec& spec) {
    if (spec.alpha.size() != g.vertex_count()) {
        throw std::invalid_argument("partition_edges: alpha length " +
                                    std::to_string(spec.alpha.size()) + " != vertex count " +
                                    std::to_string(g.vertex_count()));
    }
    EdgePartition part;
    for (const auto& e : g.edges()) {
        if (spec.alpha(e.first - 1) == -spec.alpha(e.second - 1)) {
            part.sign_flip.push_back(e);
        } else {
            part.sign_keep.push_back(e);
        }
    }
    return part;
}

Eigen::MatrixXd pattern_matrix(const Graph& g, const PatternSpec& spec) {
    const auto part = partition_edges(g, spec);
    Eigen::MatrixXd q = g.degree_matrix();
    for (const auto& [i, j] : part.sign_flip) {
        q(i - 1, j - 1) += 1.0;
        q(j - 1, i - 1) += 1.0;
    }
    for (const auto& [i, j] : part.sign_keep) {
        q(i - 1, j - 1) -= 1.0;
        q(j - 1, i - 1) -= 1.0;
    }
    return q;
}

bool is_in_pattern(const Eigen::VectorXd& x, const Graph& g, const PatternSpec& spec,
                   double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("is_in_pattern: tol must be positive");
    }
    if (x.size() != g.vertex_count()) {
        throw std::invalid_argument("is_in_pattern: state length mismatch");
    }
    const double norm = x.norm();
    if (norm < spec.p0 * std::sqrt(static_cast<double>(g.vertex_count()))) return false;
    const Eigen::MatrixXd q = pattern_matrix(g, spec);
    return (q * x).norm() <= tol * norm;
}

}  // namespace patternctl
