#include "patternctl/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace patternctl {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adjacency_(n) {
    if (n < 1) {
        throw std::invalid_argument("Graph: vertex count must be positive, got " +
                                    std::to_string(n));
    }
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n) {
            throw std::invalid_argument("Graph: edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") out of range 1.." +
                                        std::to_string(n));
        }
        if (a == b) {
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(a));
        }
        const Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) {
            throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(e.first) +
                                        "," + std::to_string(e.second) + ")");
        }
    }
    edges_.assign(seen.begin(), seen.end());
    for (const auto& [i, j] : edges_) {
        adjacency_[i - 1].push_back(j);
        adjacency_[j - 1].push_back(i);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::grid(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("grid: dimensions must be positive, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
    const auto id = [rows](int r, int c) { return (c - 1) * rows + r; };
    std::vector<Edge> edges;
    for (int c = 1; c <= cols; ++c) {
        for (int r = 1; r <= rows; ++r) {
            if (r < rows) edges.emplace_back(id(r, c), id(r + 1, c));
            if (c < cols) edges.emplace_back(id(r, c), id(r, c + 1));
        }
    }
    return Graph(rows * cols, edges);
}

Graph Graph::path(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

bool Graph::has_edge(int i, int j) const {
    const auto& nbrs = neighbors(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > n_) {
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
    }
    return adjacency_[v - 1];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

Eigen::MatrixXd Graph::adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (const auto& [i, j] : edges_) {
        a(i - 1, j - 1) = 1.0;
        a(j - 1, i - 1) = 1.0;
    }
    return a;
}

Eigen::MatrixXd Graph::degree_matrix() const {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n_, n_);
    for (int v = 1; v <= n_; ++v) d(v - 1, v - 1) = degree(v);
    return d;
}

Eigen::MatrixXd Graph::laplacian() const { return degree_matrix() - adjacency_matrix(); }

Graph Graph::induced_subgraph(const std::vector<int>& vertices) const {
    std::vector<int> position(n_ + 1, 0);  // new 1-based label, 0 = absent
    int next = 1;
    for (int v : vertices) {
        if (v < 1 || v > n_) {
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n_));
        }
        if (position[v] != 0) {
            throw std::invalid_argument("induced_subgraph: duplicated vertex " +
                                        std::to_string(v));
        }
        position[v] = next++;
    }
    std::vector<Edge> kept;
    for (const auto& [i, j] : edges_) {
        if (position[i] != 0 && position[j] != 0) kept.emplace_back(position[i], position[j]);
    }
    return Graph(static_cast<int>(vertices.size()), kept);
}

int Graph::component_count() const {
    std::vector<char> visited(n_ + 1, 0);
    int components = 0;
    std::vector<int> stack;
    for (int start = 1; start <= n_; ++start) {
        if (visited[start]) continue;
        ++components;
        stack.push_back(start);
        visited[start] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adjacency_[v - 1]) {
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

double Graph::algebraic_connectivity() const {
    if (n_ < 2) {
        throw std::invalid_argument("algebraic_connectivity: needs at least 2 vertices");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian());
    return solver.eigenvalues()(1);
}

}  // namespace patternctl
