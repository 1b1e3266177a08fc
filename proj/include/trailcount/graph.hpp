#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trailcount/common.hpp"

namespace trailcount {

/// Unordered vertex pair stored with first < second.
struct Edge {
    Vertex first;
    Vertex second;

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Position of every unordered pair of distinct vertices (edge or not) in
/// lexicographic order (1,2),(1,3),...,(1,n),(2,3),...  This fixes qubit order
/// in the edge register and generator indices in the symbolic engine.
class EdgeSlotIndex {
public:
    explicit EdgeSlotIndex(std::size_t n) : n_(n) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t size() const { return n_ < 2 ? 0 : n_ * (n_ - 1) / 2; }

    /// Slot of {a,b}; a != b, both < n.
    std::size_t slot(Vertex a, Vertex b) const;
    Edge pair(std::size_t slot) const;

private:
    std::size_t n_;
};

/// Simple undirected graph on vertices 1..n. Immutable after construction.
class Graph {
public:
    /// Validates and canonicalizes: endpoints in range, no self-loops,
    /// duplicates collapsed, edges sorted.
    Graph(std::size_t n, std::vector<Edge> edges);

    /// Same, from 1-based label pairs.
    static Graph from_labels(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& labels);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(Vertex a, Vertex b) const { return adjacency_[a.index * n_ + b.index] != 0; }
    /// Neighbours in increasing order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v.index]; }
    std::size_t degree(Vertex v) const { return neighbors_[v.index].size(); }

    /// Position of {a,b} in edges(), if it is an edge.
    std::optional<std::size_t> edge_id(Vertex a, Vertex b) const;

    EdgeSlotIndex slots() const { return EdgeSlotIndex(n_); }

    bool contains(Vertex v) const { return v.index < n_; }
    /// Throws InputError naming `what` when v is not a vertex.
    void require_vertex(Vertex v, const char* what = "vertex") const;

    bool connected() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<char> adjacency_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<std::size_t> edge_ids_;
};

/// n x n matrix of exact counts, row-major.
class CountMatrix {
public:
    explicit CountMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    static CountMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Count& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
    const Count& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    const Count& at(Vertex row, Vertex col) const { return (*this)(row.index, col.index); }

    friend CountMatrix operator*(const CountMatrix& a, const CountMatrix& b);
    friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Count> entries_;
};

/// Reads the line-oriented edge list format:
///
///     # comment
///     n 4          (optional header fixing the vertex count)
///     1 2
///     2 3
///
/// Without a header n is the largest label seen. Duplicate lines collapse.
/// Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);
/// Inverse of parse_edge_list: header line then one edge per line.
std::string format_edge_list(const Graph& g);

CountMatrix adjacency_matrix(const Graph& g);

/// A^l; l = 0 gives the identity (one empty walk per vertex).
CountMatrix walk_count_matrix(const Graph& g, std::size_t length);
/// Entry (u,v) of A^l: the number of walks of length l from u to v.
Count walk_count(const Graph& g, std::size_t length, Vertex from, Vertex to);

/// JSON array of rows of decimal strings.
nlohmann::json to_json(const CountMatrix& m);

namespace graphs {
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
/// K_{1,leaves}; vertex 1 is the centre.
Graph star(std::size_t leaves);
Graph empty(std::size_t n);
Graph petersen();
/// Two triangles {1,2,3} and {3,4,5} sharing vertex 3.
Graph bowtie();
/// The 4-cycle with the vertex numbering of the worked example:
/// E = {12, 13, 24, 34}.
Graph example_c4();
} // namespace graphs

} // namespace trailcount
