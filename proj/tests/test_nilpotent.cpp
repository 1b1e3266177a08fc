#include "doctest.h"

#include <json.hpp>

#include "brute_force.hpp"
#include "trailcount/nilpotent.hpp"
#include "trailcount/oracle.hpp"

using namespace trailcount;
using namespace trailcount::literals;
using namespace trailcount::nilpotent;

TEST_CASE("monomials are square-free")
{
    const Monomial x = Monomial::generator(3);
    const Monomial y = Monomial::generator(130);
    CHECK_FALSE(multiply(x, x).has_value());
    const auto xy = multiply(x, y);
    REQUIRE(xy.has_value());
    CHECK(xy->degree() == 2);
    CHECK(xy->generators() == std::vector<std::size_t>{3, 130});
    CHECK(multiply(*xy, Monomial{}) == xy);
    CHECK_FALSE(multiply(*xy, y).has_value());
    CHECK(Monomial{} < x);
    CHECK(x < y);
    CHECK_THROWS_AS(Monomial::generator(Monomial::capacity), CapacityError);
}

TEST_CASE("polynomial arithmetic")
{
    const Polynomial x = Polynomial::generator(0);
    const Polynomial y = Polynomial::generator(1);
    Polynomial s = x;
    s += y;
    CHECK((x * x).is_zero());
    // (x + y)^2 = 2xy under x^2 = y^2 = 0.
    const Polynomial sq = s * s;
    REQUIRE(sq.size() == 1);
    CHECK(sq.coefficient_sum() == 2);
    CHECK((sq * s).is_zero());
    CHECK(x * y == y * x);
    CHECK(to_json(sq).dump() == R"([{"coeff":"2","generators":[0,1]}])");
}

TEST_CASE("formal adjacency of the worked example")
{
    const Graph c4 = graphs::example_c4();
    const PolyMatrix a = formal_adjacency_edges(c4);
    const EdgeSlotIndex slots(4);
    CHECK(a.at(1_v, 2_v) == Polynomial::generator(slots.slot(1_v, 2_v)));
    CHECK(a.at(2_v, 1_v) == a.at(1_v, 2_v));
    CHECK(a.at(3_v, 4_v) == Polynomial::generator(slots.slot(3_v, 4_v)));
    CHECK(a.at(1_v, 4_v).is_zero());
    CHECK(a.at(1_v, 1_v).is_zero());

    CHECK(formal_adjacency_edges(graphs::empty(3)) == PolyMatrix(3));
}

TEST_CASE("nilpotent powers")
{
    const Graph c4 = graphs::example_c4();
    const PolyMatrix a = formal_adjacency_edges(c4);
    const EdgeSlotIndex slots(4);

    SUBCASE("entry (1,2) of the cube keeps only the trail")
    {
        const Polynomial e = matrix_power_nilpotent(a, 3).at(1_v, 2_v);
        REQUIRE(e.size() == 1);
        const Monomial& m = e.terms().begin()->first;
        CHECK(m.generators() ==
              std::vector<std::size_t>{slots.slot(1_v, 3_v), slots.slot(2_v, 4_v), slots.slot(3_v, 4_v)});
        CHECK(e.terms().begin()->second == 1);
    }
    SUBCASE("first power is the matrix")
    {
        CHECK(matrix_power_nilpotent(a, 1) == a);
    }
    SUBCASE("K2 squared vanishes on the diagonal")
    {
        CHECK(matrix_power_nilpotent(formal_adjacency_edges(graphs::complete(2)), 2).at(1_v, 1_v).is_zero());
    }
    SUBCASE("monomial cap")
    {
        Limits tight;
        tight.max_monomials = 10;
        CHECK_THROWS_AS(matrix_power_nilpotent(formal_adjacency_edges(graphs::complete(6)), 3, tight),
                        CapacityError);
        CHECK_THROWS_AS(trail_count_symbolic(graphs::complete(6), 4, 1_v, 2_v, tight), CapacityError);
    }
}

TEST_CASE("trail_count_symbolic")
{
    CHECK(trail_count_symbolic(graphs::example_c4(), 3, 1_v, 2_v) == 1);
    CHECK(trail_count_symbolic(graphs::example_c4(), 1, 1_v, 4_v) == 0);
    // Brute force: 1-3-4-2 and 1-4-3-2.
    CHECK(trail_count_symbolic(graphs::complete(4), 3, 1_v, 2_v) == 2);
    CHECK_THROWS_AS(trail_count_symbolic(graphs::example_c4(), 3, 1_v, 7_v), InputError);
}

TEST_CASE("euler_trail_count_symbolic")
{
    CHECK(euler_trail_count_symbolic(graphs::example_c4(), 1_v, 1_v) == 2);
    CHECK(euler_trail_count_symbolic(graphs::complete(2), 1_v, 2_v) == 1);
    CHECK(euler_trail_count_symbolic(graphs::star(3), 1_v, 1_v) == 0);
    CHECK(euler_trail_count_symbolic(graphs::bowtie(), 3_v, 3_v) == 8);
}

TEST_CASE("vertex observable matrix")
{
    const Graph c4 = graphs::example_c4();
    const PolyMatrix m = vertex_observable_matrix(c4, MVariant::Literal, 1_v);
    CHECK(m.at(1_v, 2_v) == Polynomial::generator(1));
    CHECK(m.at(2_v, 1_v) == Polynomial::generator(0));
    CHECK(m.at(1_v, 4_v).is_zero());

    const PolyMatrix k2 = vertex_observable_matrix(graphs::complete(2), MVariant::Literal, 1_v);
    CHECK(k2.at(1_v, 1_v).is_zero());
    CHECK(k2.at(1_v, 2_v) == Polynomial::generator(1));
    CHECK(k2.at(2_v, 1_v) == Polynomial::generator(0));
    CHECK(k2.at(2_v, 2_v).is_zero());

    const PolyMatrix guarded = vertex_observable_matrix(c4, MVariant::StartGuarded, 1_v);
    CHECK(guarded.at(1_v, 2_v) == Polynomial::generator(0) * Polynomial::generator(1));
    CHECK(guarded.at(2_v, 1_v) == m.at(2_v, 1_v));
}

TEST_CASE("path_count_symbolic literal vs guarded")
{
    const Graph c4 = graphs::example_c4();
    CHECK(path_count_symbolic(c4, 3, 1_v, 2_v, MVariant::StartGuarded) == 1);
    CHECK(path_count_symbolic(c4, 3, 1_v, 2_v, MVariant::Literal) == 2);
    CHECK(path_count_symbolic(graphs::complete(2), 1, 1_v, 2_v, MVariant::Literal) == 1);
    CHECK(path_count_symbolic(graphs::complete(2), 1, 1_v, 2_v, MVariant::StartGuarded) == 1);
    CHECK_THROWS_AS(path_count_symbolic(c4, 0, 1_v, 2_v, MVariant::Literal), InputError);
}

TEST_CASE("cycle_count_symbolic")
{
    CHECK(cycle_count_symbolic(graphs::example_c4(), 4, 1_v) == 2);
    CHECK(cycle_count_symbolic(graphs::complete(4), 3, 1_v) == 6);
    CHECK(cycle_count_symbolic(graphs::example_c4(), 3, 1_v) == 0);
    CHECK_THROWS_AS(cycle_count_symbolic(graphs::example_c4(), 2, 1_v), InputError);
}

TEST_CASE("symbolic counts match brute force on small graphs")
{
    const std::vector<Graph> gs{graphs::complete(4), graphs::bowtie(), graphs::cycle(5), graphs::path(4)};
    for (const Graph& g : gs)
        for (std::size_t l = 1; l <= 5; ++l)
            for (std::size_t u = 0; u < g.vertex_count(); ++u)
                for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                    CHECK(trail_count_symbolic(g, l, Vertex{u}, Vertex{v}) ==
                          brute::count(g, l, u, v, brute::is_trail));
                    CHECK(path_count_symbolic(g, l, Vertex{u}, Vertex{v}, MVariant::Literal) ==
                          brute::count(g, l, u, v, brute::is_distinct_non_initial));
                    if (u != v)
                        CHECK(path_count_symbolic(g, l, Vertex{u}, Vertex{v}, MVariant::StartGuarded) ==
                              brute::count(g, l, u, v, brute::is_path));
                }
}

TEST_CASE("every surviving monomial of the l-th power has degree l")
{
    const PolyMatrix a = formal_adjacency_edges(graphs::complete(5));
    for (std::size_t l = 1; l <= 5; ++l) {
        const PolyMatrix p = matrix_power_nilpotent(a, l);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                for (const auto& [m, c] : p(i, j).terms()) {
                    CHECK(m.degree() == l);
                    CHECK(c >= 1);
                }
    }
}
