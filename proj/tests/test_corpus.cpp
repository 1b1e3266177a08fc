#include "doctest.h"

#include <set>

#include "trailcount/corpus.hpp"

using namespace trailcount;

TEST_CASE("connected graph counts match the known sequence")
{
    // Unlabelled connected graphs on n vertices (OEIS A001349).
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
    const auto all = corpus::connected_graphs_up_to(7);
    std::size_t offset = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        std::set<std::uint64_t> codes;
        for (std::size_t k = 0; k < expected[n - 1]; ++k) {
            const Graph& g = all.at(offset + k);
            CHECK(g.vertex_count() == n);
            CHECK(g.connected());
            codes.insert(corpus::canonical_code(g));
        }
        CHECK(codes.size() == expected[n - 1]);
        offset += expected[n - 1];
    }
    CHECK(all.size() == offset);
    CHECK(corpus::connected_graphs(5).size() == 21);
}

TEST_CASE("canonical code is a relabelling invariant")
{
    const Graph p = graphs::petersen();
    // Relabel by a fixed permutation.
    const std::size_t perm[] = {3, 7, 0, 9, 5, 1, 8, 2, 6, 4};
    std::vector<Edge> relabelled;
    for (const Edge& e : p.edges())
        relabelled.push_back(Edge{Vertex{perm[e.first.index]}, Vertex{perm[e.second.index]}});
    const Graph q(10, relabelled);
    CHECK(corpus::canonical_code(p) == corpus::canonical_code(q));
    CHECK(corpus::canonical_code(graphs::cycle(6)) != corpus::canonical_code(graphs::path(6)));
    CHECK(corpus::canonical_code(corpus::decode(6, corpus::canonical_code(graphs::cycle(6)))) ==
          corpus::canonical_code(graphs::cycle(6)));
}

TEST_CASE("random graphs are reproducible")
{
    const auto a = corpus::random_graphs(5, 7, 0.4, 42);
    const auto b = corpus::random_graphs(5, 7, 0.4, 42);
    const auto c = corpus::random_graphs(5, 7, 0.4, 43);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(corpus::random_graphs(1, 6, 1.0, 1)[0].edge_count() == 15);
    CHECK(corpus::random_graphs(1, 6, 0.0, 1)[0].edge_count() == 0);
    CHECK_THROWS_AS(corpus::random_graphs(1, 6, 1.5, 1), InputError);
}
