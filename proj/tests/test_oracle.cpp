#include "doctest.h"

#include <set>

#include "brute_force.hpp"
#include "trailcount/oracle.hpp"

using namespace trailcount;
using namespace trailcount::literals;
using oracle::WalkClass;
using oracle::WalkSeq;

namespace {

WalkSeq seq(std::initializer_list<std::size_t> labels)
{
    WalkSeq w;
    for (std::size_t l : labels)
        w.vertices.push_back(Vertex::from_label(l));
    return w;
}

} // namespace

TEST_CASE("enumerate walks of the worked example")
{
    const Graph c4 = graphs::example_c4();
    const auto walks = oracle::enumerate(c4, 3, 1_v, 2_v, WalkClass::Walk);
    // One per monomial of the length-3 formal adjacency entry (1,2).
    CHECK(walks == std::vector<WalkSeq>{seq({1, 2, 1, 2}), seq({1, 2, 4, 2}), seq({1, 3, 1, 2}), seq({1, 3, 4, 2})});

    CHECK(oracle::enumerate(c4, 3, 1_v, 2_v, WalkClass::Trail) == std::vector<WalkSeq>{seq({1, 3, 4, 2})});
    CHECK(oracle::enumerate(c4, 1, 1_v, 2_v, WalkClass::Path) == std::vector<WalkSeq>{seq({1, 2})});
}

TEST_CASE("count per class on the worked example")
{
    const Graph c4 = graphs::example_c4();
    CHECK(oracle::count(c4, 3, 1_v, 2_v, WalkClass::Walk) == 4);
    CHECK(oracle::count(c4, 3, 1_v, 2_v, WalkClass::Trail) == 1);
    CHECK(oracle::count(c4, 3, 1_v, 2_v, WalkClass::Path) == 1);
    CHECK(oracle::count(c4, 3, 1_v, 2_v, WalkClass::DistinctNonInitial) == 2);
    CHECK(oracle::enumerate(c4, 3, 1_v, 2_v, WalkClass::DistinctNonInitial) ==
          std::vector<WalkSeq>{seq({1, 3, 1, 2}), seq({1, 3, 4, 2})});
}

TEST_CASE("length zero and closed paths")
{
    const Graph k4 = graphs::complete(4);
    CHECK(oracle::count(k4, 0, 1_v, 1_v, WalkClass::Walk) == 1);
    CHECK(oracle::count(k4, 0, 1_v, 1_v, WalkClass::Trail) == 1);
    CHECK(oracle::count(k4, 0, 1_v, 1_v, WalkClass::Path) == 0);
    CHECK(oracle::count(k4, 0, 1_v, 2_v, WalkClass::Walk) == 0);
    CHECK(oracle::count(k4, 2, 1_v, 1_v, WalkClass::Path) == 0);
    CHECK(oracle::count(k4, 3, 1_v, 1_v, WalkClass::Path) == 6);
    CHECK(oracle::count(k4, 4, 1_v, 1_v, WalkClass::Path) == 6);
    CHECK(oracle::count(k4, 5, 1_v, 1_v, WalkClass::Path) == 0);
}

TEST_CASE("vertex out of range")
{
    CHECK_THROWS_AS(oracle::enumerate(graphs::complete(3), 2, 1_v, 4_v, WalkClass::Walk), InputError);
    CHECK_THROWS_AS(oracle::count(graphs::complete(3), 2, 9_v, 1_v, WalkClass::Trail), InputError);
}

TEST_CASE("budget exceeded is a distinct error")
{
    Limits tight;
    tight.max_visits = 50;
    CHECK_THROWS_AS(oracle::count(graphs::complete(6), 6, 1_v, 2_v, WalkClass::Walk, tight), BudgetExceeded);
}

TEST_CASE("closed Euler trails")
{
    CHECK(oracle::count_closed_euler_trails(graphs::example_c4(), 1_v) == 2);
    CHECK(oracle::count_closed_euler_trails(graphs::complete(2), 1_v) == 0);
    CHECK(oracle::count_closed_euler_trails(graphs::star(3), 1_v) == 0);
    CHECK(oracle::count_closed_euler_trails(graphs::empty(1), 1_v) == 1);
}

TEST_CASE("Hamiltonian cycles through a vertex")
{
    CHECK(oracle::count_hamiltonian_cycles_through(graphs::example_c4(), 1_v, false) == 1);
    CHECK(oracle::count_hamiltonian_cycles_through(graphs::example_c4(), 1_v, true) == 2);
    CHECK(oracle::count_hamiltonian_cycles_through(graphs::complete(4), 2_v, false) == 3);
    CHECK(oracle::count_hamiltonian_cycles_through(graphs::complete(4), 2_v, true) == 6);
    CHECK(oracle::count_hamiltonian_cycles_through(graphs::petersen(), 1_v, true) == 0);
    CHECK(oracle::count_hamiltonian_cycles_through(graphs::complete(2), 1_v, true) == 0);

    for (const Graph& g : {graphs::complete(5), graphs::cycle(7), graphs::bowtie(), graphs::petersen()})
        CHECK(oracle::count_hamiltonian_cycles_through(g, 1_v, true) == brute::directed_hamiltonian_through(g, 0));
}

TEST_CASE("trail edge-set histogram")
{
    SUBCASE("worked example has one edge set")
    {
        const auto h = oracle::trail_edge_set_histogram(graphs::example_c4(), 3, 1_v, 2_v);
        const EdgeSlotIndex s(4);
        REQUIRE(h.size() == 1);
        CHECK(h.begin()->first == oracle::EdgeSet{s.slot(1_v, 3_v), s.slot(2_v, 4_v), s.slot(3_v, 4_v)});
        CHECK(h.begin()->second == 1);
    }
    SUBCASE("K2")
    {
        const auto h = oracle::trail_edge_set_histogram(graphs::complete(2), 1, 1_v, 2_v);
        REQUIRE(h.size() == 1);
        CHECK(h.begin()->first == oracle::EdgeSet{0});
        CHECK(h.begin()->second == 1);
    }
    SUBCASE("bowtie closed trails share the full edge set")
    {
        const auto h = oracle::trail_edge_set_histogram(graphs::bowtie(), 6, 3_v, 3_v);
        REQUIRE(h.size() == 1);
        CHECK(h.begin()->second == 8);
        CHECK(oracle::count(graphs::bowtie(), 6, 3_v, 3_v, WalkClass::StartOnceTrailEdgeSet) == 1);
    }
}

TEST_CASE("enumerate agrees with brute force and is well formed")
{
    const std::vector<Graph> gs{graphs::example_c4(), graphs::complete(4), graphs::bowtie(), graphs::star(3),
                                graphs::path(4)};
    for (const Graph& g : gs)
        for (std::size_t l = 1; l <= 5; ++l)
            for (std::size_t u = 0; u < g.vertex_count(); ++u)
                for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                    const Vertex a{u}, b{v};
                    CHECK(oracle::count(g, l, a, b, WalkClass::Walk) == brute::walks(g, l, u, v).size());
                    CHECK(oracle::count(g, l, a, b, WalkClass::Trail) == brute::count(g, l, u, v, brute::is_trail));
                    CHECK(oracle::count(g, l, a, b, WalkClass::Path) == brute::count(g, l, u, v, brute::is_path));
                    CHECK(oracle::count(g, l, a, b, WalkClass::DistinctNonInitial) ==
                          brute::count(g, l, u, v, brute::is_distinct_non_initial));

                    for (WalkClass c : {WalkClass::Trail, WalkClass::Path, WalkClass::DistinctNonInitial,
                                        WalkClass::StartOnceTrailEdgeSet}) {
                        const auto ws = oracle::enumerate(g, l, a, b, c);
                        CHECK(std::set<WalkSeq>(ws.begin(), ws.end()).size() == ws.size());
                        CHECK(std::is_sorted(ws.begin(), ws.end()));
                        for (const WalkSeq& w : ws)
                            CHECK(oracle::satisfies(g, w, c));
                    }
                    CHECK(oracle::count(g, l, a, b, WalkClass::StartOnceTrailEdgeSet) ==
                          brute::trail_histogram(g, l, u, v).size());
                }
}

TEST_CASE("satisfies rejects non-members")
{
    const Graph c4 = graphs::example_c4();
    CHECK_FALSE(oracle::satisfies(c4, seq({1, 4}), WalkClass::Walk));
    CHECK_FALSE(oracle::satisfies(c4, seq({1, 2, 1, 2}), WalkClass::Trail));
    CHECK_FALSE(oracle::satisfies(c4, seq({1, 3, 1, 2}), WalkClass::Path));
    CHECK(oracle::satisfies(c4, seq({1, 3, 1, 2}), WalkClass::DistinctNonInitial));
    CHECK_FALSE(oracle::satisfies(c4, seq({1, 2, 1, 2}), WalkClass::DistinctNonInitial));
    CHECK(oracle::satisfies(c4, seq({1, 2, 4, 3, 1}), WalkClass::Path));
}

TEST_CASE("memoized oracle returns the same counts")
{
    const oracle::MemoizedOracle memo(graphs::complete(5));
    for (int pass = 0; pass < 2; ++pass)
        CHECK(memo.count(4, 1_v, 2_v, WalkClass::Trail) ==
              oracle::count(graphs::complete(5), 4, 1_v, 2_v, WalkClass::Trail));
}
