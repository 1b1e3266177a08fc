#pragma once

// Brute-force ground truth. Everything here walks the graph directly by
// depth-first search; no algebra, no operators. The other engines are
// checked against these counts.

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string_view>
#include <tuple>
#include <vector>

#include "trailcount/common.hpp"
#include "trailcount/graph.hpp"

namespace trailcount::oracle {

/// v0 v1 ... vl with consecutive vertices adjacent; length() = l.
struct WalkSeq {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    friend bool operator==(const WalkSeq&, const WalkSeq&) = default;
    friend auto operator<=>(const WalkSeq&, const WalkSeq&) = default;
};

/// Predicate a walk is filtered by. All classes count traversal sequences, so
/// a walk and its reversal are different elements.
enum class WalkClass {
    Walk,
    /// No edge repeated.
    Trail,
    /// No vertex repeated. A closed path (u == v) is a cycle: length >= 3 and
    /// v0..v(l-1) pairwise distinct.
    Path,
    /// v1..vl pairwise distinct, v0 unconstrained.
    DistinctNonInitial,
    /// One representative trail per traversed edge set: the lexicographically
    /// first trail among those from u to v that use exactly that edge set.
    StartOnceTrailEdgeSet,
};

std::string_view name(WalkClass c);

/// Per-element membership test, independent of the search code.
bool satisfies(const Graph& g, const WalkSeq& walk, WalkClass c);

/// Every walk of length l from u to v in the class, lexicographic by vertex
/// sequence. Throws BudgetExceeded when the search visits more than
/// limits.max_visits nodes.
std::vector<WalkSeq> enumerate(const Graph& g, std::size_t length, Vertex from, Vertex to, WalkClass c,
                               const Limits& limits = {});

/// enumerate(...).size() without materializing the walks.
Count count(const Graph& g, std::size_t length, Vertex from, Vertex to, WalkClass c, const Limits& limits = {});

/// Closed trails of length |E| from u back to u. Each direction of a circuit
/// is a separate trail. The edgeless graph has one (empty) circuit.
Count count_closed_euler_trails(const Graph& g, Vertex u, const Limits& limits = {});

/// Hamiltonian cycles through u. Directed counts the closed walks u -> ... -> u
/// of length n that visit every vertex once, which is twice the undirected
/// count. Graphs with fewer than 3 vertices have none.
Count count_hamiltonian_cycles_through(const Graph& g, Vertex u, bool directed, const Limits& limits = {});

/// Sorted edge slots (EdgeSlotIndex order).
using EdgeSet = std::vector<std::size_t>;

/// For each edge set S of size l, the number t_S of trails from u to v whose
/// traversed edges are exactly S. Zero entries are omitted.
std::map<EdgeSet, Count> trail_edge_set_histogram(const Graph& g, std::size_t length, Vertex from, Vertex to,
                                                  const Limits& limits = {});

/// Thread-safe memoizing front end over count() for one graph.
class MemoizedOracle {
public:
    explicit MemoizedOracle(Graph g, Limits limits = {}) : graph_(std::move(g)), limits_(limits) {}

    const Graph& graph() const { return graph_; }
    Count count(std::size_t length, Vertex from, Vertex to, WalkClass c) const;

private:
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, WalkClass>;

    Graph graph_;
    Limits limits_;
    mutable std::mutex mutex_;
    mutable std::map<Key, Count> memo_;
};

} // namespace trailcount::oracle
