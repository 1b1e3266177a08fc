#pragma once

// Occupation-basis evaluation of the counting observables.
//
// Registers are tensor products of qubits, one per vertex pair (edge space),
// per graph edge (edge subspace) or per vertex (vertex space). Operators act
// on kets through the single-qubit ladder table:
//
//     a|0> = 0    a|1> = |0>    a^dag|0> = |1>    a^dag|1> = 0    N|k> = k|k>
//
// An entry of a power of an operator matrix is the formal sum, over walks,
// of the product of the entries along the walk. The engine expands that sum
// term by term, applying each ladder operator to the current ket as soon as
// it is generated and dropping the term once the ket vanishes. Amplitudes are
// exact integers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "trailcount/common.hpp"
#include "trailcount/graph.hpp"

namespace trailcount::fock {

enum class RegisterKind {
    /// One qubit per unordered vertex pair, EdgeSlotIndex order.
    EdgeSpace,
    /// One qubit per edge of the graph, in Graph::edges() order.
    EdgeSubspace,
    /// One qubit per vertex.
    VertexSpace,
};

std::string_view name(RegisterKind k);

class Register {
public:
    /// Each throws CapacityError, naming the required width, when the register
    /// would exceed limits.max_qubits.
    static Register edge_space(const Graph& g, const Limits& limits = {});
    static Register edge_subspace(const Graph& g, const Limits& limits = {});
    static Register vertex_space(const Graph& g, const Limits& limits = {});

    RegisterKind kind() const { return kind_; }
    std::size_t width() const { return width_; }
    std::size_t vertex_count() const { return n_; }

    /// Qubit of the pair {a,b}; nullopt when the register has none (vertex
    /// space, or a non-edge in the edge subspace).
    std::optional<std::size_t> pair_slot(Vertex a, Vertex b) const;
    /// Qubit of vertex v in the vertex space.
    std::size_t vertex_slot(Vertex v) const;
    /// "(1,2)" for pair slots, "3" for vertex slots.
    std::string slot_name(std::size_t slot) const;

    friend bool operator==(const Register&, const Register&) = default;

private:
    Register(RegisterKind kind, std::size_t n, std::size_t width, const Limits& limits);

    RegisterKind kind_;
    std::size_t n_;
    std::size_t width_;
    std::vector<std::size_t> pair_to_slot_;
    std::vector<Edge> slot_to_pair_;
};

using Amplitude = std::int64_t;
using BasisIndex = std::uint64_t;

/// Dense amplitude vector over 2^width basis states. Bit b of a basis index
/// is the occupation of slot b.
class StateVector {
public:
    /// The zero vector.
    explicit StateVector(const Register& reg);
    static StateVector basis(const Register& reg, BasisIndex index);

    const Register& reg() const { return reg_; }
    std::size_t width() const { return reg_.width(); }
    std::size_t dimension() const { return amplitudes_.size(); }

    Amplitude amplitude(BasisIndex index) const { return amplitudes_.at(index); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    /// Throws CapacityError on signed overflow.
    void add(BasisIndex index, Amplitude value);
    void set(BasisIndex index, Amplitude value) { amplitudes_.at(index) = value; }

    Count squared_norm() const;
    bool is_zero() const;
    /// Occupations of `index` as a string, slot 0 first: "110011".
    std::string occupation_string(BasisIndex index) const;

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    Register reg_;
    std::vector<Amplitude> amplitudes_;
};

/// Real inner product <a|b>.
Count inner_product(const StateVector& a, const StateVector& b);

/// {"width", "kind", "nonzero": [{"index", "amplitude"}]}
nlohmann::json to_json(const StateVector& s);

enum class LadderKind { Annihilate, Create, Number };

struct LadderOp {
    LadderKind kind;
    std::size_t slot;

    friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

/// Ordered operator product; ops.front() is leftmost, so it acts last on a ket.
struct OperatorTerm {
    std::vector<LadderOp> ops;

    friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

/// A weighted basis state; the unit of work for term-by-term evaluation.
struct BasisKet {
    BasisIndex index;
    Amplitude amplitude;
};

/// Action on one basis ket; nullopt is the zero vector.
std::optional<BasisKet> apply(const LadderOp& op, const BasisKet& ket);

/// Linear action on a dense state. Throws InputError for a slot outside the
/// register.
StateVector apply_ladder(const LadderOp& op, const StateVector& s);
/// Applies ops right to left.
StateVector apply_term(const OperatorTerm& term, const StateVector& s);

/// Rewrites the term with every creation operator to the left of every
/// annihilation operator, each N expanded to a^dag a. Relative order within
/// each group is kept.
OperatorTerm normal_order(const OperatorTerm& term);

/// The graph basis state: slot {u,v} occupied iff {u,v} is an edge.
/// Accepts EdgeSpace or EdgeSubspace.
StateVector graph_state(const Graph& g, RegisterKind kind = RegisterKind::EdgeSpace, const Limits& limits = {});
/// |1...1> in the vertex space.
StateVector all_ones_state(const Graph& g, const Limits& limits = {});

/// Operator matrices.
///   NEdge:   (u,v) -> N on pair slot {u,v}      (every pair u != v)
///   MVertex: (u,v) -> N on the vertex slot of v (edges of G only)
///   DEdge:   (u,v) -> a on pair slot {u,v}      (every pair u != v)
///   FVertex: (u,v) -> a on the vertex slot of v (edges of G only)
enum class MatrixKind { NEdge, MVertex, DEdge, FVertex };

std::string_view name(MatrixKind k);

struct WalkTerm {
    std::vector<Vertex> walk;
    OperatorTerm term;
};

/// One term per walk of length l from u to v in G, carrying the operator
/// product that entry (u,v) of the l-th matrix power assigns to it. Terms of
/// the edge matrices on non-edges are omitted since they vanish on the graph
/// state.
std::vector<WalkTerm> expand_walk_terms(const Graph& g, std::size_t length, Vertex from, Vertex to, MatrixKind kind,
                                        const Limits& limits = {});

struct ObservableOptions {
    /// NEdge only: use the edge subspace instead of all vertex pairs.
    bool edge_subspace = false;
    /// MVertex only: prepend N on the start vertex (the StartGuarded
    /// correction, not part of the original observable).
    bool start_guarded = false;
};

/// <s| :X^l_{u,v}: |s> for X = NEdge on the graph state or X = MVertex on
/// |1...1>. l = 0 is the identity matrix.
Count normal_ordered_expectation(const Graph& g, std::size_t length, Vertex from, Vertex to, MatrixKind kind,
                                 const ObservableOptions& options = {}, const Limits& limits = {});

/// <psi_G| N^l_{u,v} |psi_G> without normal ordering: every walk contributes,
/// so this is the walk count.
Count plain_expectation(const Graph& g, std::size_t length, Vertex from, Vertex to, const Limits& limits = {});

/// Expectation of a single term on a dense state, evaluated by applying the
/// ops to the full vector.
Count expectation(const OperatorTerm& term, const StateVector& s);

/// D^l_{u,v} |psi_G>.
StateVector d_matrix_state(const Graph& g, std::size_t length, Vertex from, Vertex to, const Limits& limits = {});
/// <psi_G| (D^l_{u,v})^dag D^l_{u,v} |psi_G>: the squared norm of
/// d_matrix_state. Equals the sum over edge sets S of t_S^2.
Count d_matrix_quadratic_form(const Graph& g, std::size_t length, Vertex from, Vertex to,
                              const Limits& limits = {});

/// F^l_{u,u} |1...1>.
StateVector f_matrix_state(const Graph& g, std::size_t length, Vertex u, const Limits& limits = {});
/// <0...0| F^l_{u,u} |1...1>. Zero unless l = n, where it counts directed
/// Hamiltonian cycles through u.
Count f_matrix_amplitude(const Graph& g, std::size_t length, Vertex u, const Limits& limits = {});

/// f_matrix_amplitude(g, n, 1) > 0. Graphs with fewer than 3 vertices have
/// no cycles and report false.
bool is_hamiltonian(const Graph& g, const Limits& limits = {});

} // namespace trailcount::fock
