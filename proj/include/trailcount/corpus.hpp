#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "trailcount/graph.hpp"

namespace trailcount::corpus {

/// Canonical code of a graph on at most 11 vertices: the lexicographically
/// smallest upper-triangle adjacency bit string over all relabellings that
/// respect the stable colour-refinement partition. Isomorphic graphs share a
/// code.
std::uint64_t canonical_code(const Graph& g);
/// Rebuilds the graph whose upper-triangle bits (EdgeSlotIndex order) are
/// `code`.
Graph decode(std::size_t n, std::uint64_t code);

/// One representative per isomorphism class of connected graphs on exactly
/// n vertices, ordered by canonical code. Built by vertex augmentation from
/// the n-1 level. Supports n <= 9.
std::vector<Graph> connected_graphs(std::size_t n);
/// connected_graphs(1) ... connected_graphs(n_max) concatenated.
std::vector<Graph> connected_graphs_up_to(std::size_t n_max);

/// G(n, p) samples from a seeded 64-bit Mersenne twister. Each pair (i<j),
/// in slot order, is an edge when the next draw is below p * 2^64, so a seed
/// reproduces the same graphs on every platform.
std::vector<Graph> random_graphs(std::size_t count, std::size_t n, double edge_probability, std::uint64_t seed);

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Small graphs with known counts used by the acceptance checks and `verify
/// --named`: C4 from the worked example, K4, the bowtie, P3, K_{1,3},
/// Petersen and a few trees and cycles.
std::vector<NamedGraph> named_graphs();

} // namespace trailcount::corpus
