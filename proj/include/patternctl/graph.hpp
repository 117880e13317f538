#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace patternctl {

// Undirected simple graph on vertices labeled 1..n. Immutable after
// construction; all queries are safe for concurrent reads.
//
// Grid graphs are labeled top-to-bottom, then left-to-right (column-major):
// vertex (row r, column c) of an R x C grid is (c-1)*R + r. Everything that
// reproduces the paper-style grid scenarios depends on this ordering.
class Graph {
public:
    using Edge = std::pair<int, int>;

    // Edges may be given in either orientation; they are normalized to
    // (i, j) with i < j. Self-loops and duplicate pairs are rejected.
    Graph(int n, const std::vector<Edge>& edges);

    static Graph grid(int rows, int cols);
    static Graph path(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    Eigen::MatrixXd adjacency_matrix() const;
    Eigen::MatrixXd degree_matrix() const;
    Eigen::MatrixXd laplacian() const;

    // Graph on the listed vertices (relabeled 1..k in list order), keeping
    // exactly the edges with both endpoints in the list.
    Graph induced_subgraph(const std::vector<int>& vertices) const;

    int component_count() const;
    bool is_connected() const { return component_count() == 1; }

    // Second-smallest Laplacian eigenvalue; requires n >= 2.
    double algebraic_connectivity() const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;  // neighbor lists, 1-based labels
};

}  // namespace patternctl
