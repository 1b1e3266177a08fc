#pragma once

// Polynomials over commuting generators with x*x = 0.
//
// A repeated generator kills a term, which is exactly what normal ordering
// does to a product of number operators on a basis state. Matrices over this
// ring therefore count trails (edge generators) or walks with distinct
// visited vertices (vertex generators) without building a Hilbert space.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "trailcount/common.hpp"
#include "trailcount/graph.hpp"

namespace trailcount::nilpotent {

/// Square-free monomial: a set of generator indices stored as a bit set.
/// The empty set is the unit monomial.
class Monomial {
public:
    static constexpr std::size_t capacity = 256;

    Monomial() = default;
    /// Throws CapacityError for index >= capacity.
    static Monomial generator(std::size_t index);

    bool contains(std::size_t index) const { return (words_[index / 64] >> (index % 64)) & 1U; }
    std::size_t degree() const;
    std::vector<std::size_t> generators() const;
    bool is_unit() const { return degree() == 0; }

    /// Product in the quotient ring; nullopt when a generator is shared.
    friend std::optional<Monomial> multiply(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Ascending as an unsigned integer whose bit i is generator i.
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::array<std::uint64_t, capacity / 64> words_{};
};

/// Sparse polynomial with positive integer coefficients, terms iterated in
/// ascending monomial order.
class Polynomial {
public:
    using Terms = std::map<Monomial, Count>;

    Polynomial() = default;
    static Polynomial constant(Count c);
    static Polynomial generator(std::size_t index);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Count coefficient_sum() const;
    /// Coefficient of m (zero when absent).
    Count coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Count& c);
    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

/// [{"generators": [i, ...], "coeff": "decimal"}, ...] in canonical order.
nlohmann::json to_json(const Polynomial& p);

/// n x n matrix over the nilpotent polynomial ring.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    static PolyMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Polynomial& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
    const Polynomial& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    const Polynomial& at(Vertex row, Vertex col) const { return (*this)(row.index, col.index); }

    /// Total number of stored terms over all entries.
    std::size_t live_monomials() const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Polynomial> entries_;
};

/// Ordinary matrix product over the ring; throws CapacityError when the
/// result holds more than limits.max_monomials terms.
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const Limits& limits = {});

/// Entry (u,v) is the edge-slot generator of {u,v} when it is an edge. The
/// (u,v) and (v,u) entries share one generator.
PolyMatrix formal_adjacency_edges(const Graph& g);

/// m^l, reducing x*x = 0 at every multiplication. l = 0 gives the identity.
PolyMatrix matrix_power_nilpotent(const PolyMatrix& m, std::size_t length, const Limits& limits = {});

/// Number of trails of length l from u to v: the coefficient sum of entry
/// (u,v) of the formal adjacency power.
Count trail_count_symbolic(const Graph& g, std::size_t length, Vertex from, Vertex to, const Limits& limits = {});

/// trail_count_symbolic at l = |E|: Eulerian trails from u to v.
Count euler_trail_count_symbolic(const Graph& g, Vertex from, Vertex to, const Limits& limits = {});

enum class MVariant {
    /// The destination-vertex observable as originally defined. Counts walks
    /// whose vertices after the first are pairwise distinct, which
    /// overcounts paths whenever a walk returns to its start once.
    Literal,
    /// Correction that is not part of the original observable: row u is
    /// multiplied by the start vertex generator, so walks through u again
    /// vanish and the open-walk count becomes the path count.
    StartGuarded,
};

/// Entry (a,b) is the vertex generator of b when {a,b} is an edge. For
/// StartGuarded, row `start` additionally carries the generator of `start`.
PolyMatrix vertex_observable_matrix(const Graph& g, MVariant variant, Vertex start);

/// Coefficient sum of entry (u,v) of the vertex observable power. Requires
/// l >= 1.
Count path_count_symbolic(const Graph& g, std::size_t length, Vertex from, Vertex to, MVariant variant,
                          const Limits& limits = {});

/// Literal entry (u,u) at length l >= 3: directed cycles of length l through
/// u (each undirected cycle twice).
Count cycle_count_symbolic(const Graph& g, std::size_t length, Vertex u, const Limits& limits = {});

} // namespace trailcount::nilpotent
