#include "trailcount/fock.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include <json.hpp>

namespace trailcount::fock {

namespace {

constexpr std::size_t no_slot = std::numeric_limits<std::size_t>::max();
// Basis indices are 64-bit and the dense vector must be addressable.
constexpr std::size_t hard_width_cap = 40;

} // namespace

std::string_view name(RegisterKind k)
{
    switch (k) {
    case RegisterKind::EdgeSpace: return "edge-space";
    case RegisterKind::EdgeSubspace: return "edge-subspace";
    case RegisterKind::VertexSpace: return "vertex-space";
    }
    return "?";
}

std::string_view name(MatrixKind k)
{
    switch (k) {
    case MatrixKind::NEdge: return "N";
    case MatrixKind::MVertex: return "M";
    case MatrixKind::DEdge: return "D";
    case MatrixKind::FVertex: return "F";
    }
    return "?";
}

Register::Register(RegisterKind kind, std::size_t n, std::size_t width, const Limits& limits)
    : kind_(kind), n_(n), width_(width)
{
    const std::size_t cap = std::min(limits.max_qubits, hard_width_cap);
    if (width > cap)
        throw CapacityError(std::string(name(kind)) + " register needs " + std::to_string(width) +
                            " qubits, cap is " + std::to_string(cap));
}

Register Register::edge_space(const Graph& g, const Limits& limits)
{
    const EdgeSlotIndex slots = g.slots();
    Register reg(RegisterKind::EdgeSpace, g.vertex_count(), slots.size(), limits);
    const std::size_t n = g.vertex_count();
    reg.pair_to_slot_.assign(n * n, no_slot);
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const Edge e = slots.pair(s);
        reg.pair_to_slot_[e.first.index * n + e.second.index] = s;
        reg.pair_to_slot_[e.second.index * n + e.first.index] = s;
        reg.slot_to_pair_.push_back(e);
    }
    return reg;
}

Register Register::edge_subspace(const Graph& g, const Limits& limits)
{
    Register reg(RegisterKind::EdgeSubspace, g.vertex_count(), g.edge_count(), limits);
    const std::size_t n = g.vertex_count();
    reg.pair_to_slot_.assign(n * n, no_slot);
    for (std::size_t s = 0; s < g.edge_count(); ++s) {
        const Edge e = g.edges()[s];
        reg.pair_to_slot_[e.first.index * n + e.second.index] = s;
        reg.pair_to_slot_[e.second.index * n + e.first.index] = s;
        reg.slot_to_pair_.push_back(e);
    }
    return reg;
}

Register Register::vertex_space(const Graph& g, const Limits& limits)
{
    return Register(RegisterKind::VertexSpace, g.vertex_count(), g.vertex_count(), limits);
}

std::optional<std::size_t> Register::pair_slot(Vertex a, Vertex b) const
{
    if (kind_ == RegisterKind::VertexSpace || a.index >= n_ || b.index >= n_)
        return std::nullopt;
    const std::size_t s = pair_to_slot_[a.index * n_ + b.index];
    if (s == no_slot)
        return std::nullopt;
    return s;
}

std::size_t Register::vertex_slot(Vertex v) const
{
    if (kind_ != RegisterKind::VertexSpace || v.index >= n_)
        throw InputError("vertex " + std::to_string(v.label()) + " has no slot in this register");
    return v.index;
}

std::string Register::slot_name(std::size_t slot) const
{
    if (slot >= width_)
        throw InputError("slot " + std::to_string(slot) + " outside register of width " + std::to_string(width_));
    if (kind_ == RegisterKind::VertexSpace)
        return std::to_string(slot + 1);
    const Edge e = slot_to_pair_[slot];
    return "(" + std::to_string(e.first.label()) + "," + std::to_string(e.second.label()) + ")";
}

StateVector::StateVector(const Register& reg) : reg_(reg), amplitudes_(std::size_t{1} << reg.width(), 0) {}

StateVector StateVector::basis(const Register& reg, BasisIndex index)
{
    StateVector s(reg);
    s.amplitudes_.at(index) = 1;
    return s;
}

void StateVector::add(BasisIndex index, Amplitude value)
{
    Amplitude& slot = amplitudes_.at(index);
    if (__builtin_add_overflow(slot, value, &slot))
        throw CapacityError("amplitude overflow at basis index " + std::to_string(index));
}

Count StateVector::squared_norm() const
{
    Count total = 0;
    for (Amplitude a : amplitudes_)
        if (a != 0)
            total += Count(a) * a;
    return total;
}

bool StateVector::is_zero() const
{
    return std::all_of(amplitudes_.begin(), amplitudes_.end(), [](Amplitude a) { return a == 0; });
}

std::string StateVector::occupation_string(BasisIndex index) const
{
    std::string bits(width(), '0');
    for (std::size_t b = 0; b < width(); ++b)
        if ((index >> b) & 1U)
            bits[b] = '1';
    return bits;
}

Count inner_product(const StateVector& a, const StateVector& b)
{
    if (a.reg() != b.reg())
        throw InputError("inner product of states on different registers");
    Count total = 0;
    const auto lhs = a.amplitudes();
    const auto rhs = b.amplitudes();
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] != 0 && rhs[i] != 0)
            total += Count(lhs[i]) * rhs[i];
    return total;
}

nlohmann::json to_json(const StateVector& s)
{
    nlohmann::json nonzero = nlohmann::json::array();
    const auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i)
        if (amps[i] != 0)
            nonzero.push_back({{"index", i}, {"amplitude", amps[i]}});
    return {{"width", s.width()}, {"kind", name(s.reg().kind())}, {"nonzero", std::move(nonzero)}};
}

std::optional<BasisKet> apply(const LadderOp& op, const BasisKet& ket)
{
    const BasisIndex mask = BasisIndex{1} << op.slot;
    const bool occupied = (ket.index & mask) != 0;
    switch (op.kind) {
    case LadderKind::Annihilate:
        if (!occupied)
            return std::nullopt;
        return BasisKet{ket.index & ~mask, ket.amplitude};
    case LadderKind::Create:
        if (occupied)
            return std::nullopt;
        return BasisKet{ket.index | mask, ket.amplitude};
    case LadderKind::Number:
        if (!occupied)
            return std::nullopt;
        return ket;
    }
    return std::nullopt;
}

StateVector apply_ladder(const LadderOp& op, const StateVector& s)
{
    if (op.slot >= s.width())
        throw InputError("ladder operator slot " + std::to_string(op.slot) + " outside register of width " +
                         std::to_string(s.width()));
    StateVector out(s.reg());
    const auto amps = s.amplitudes();
    for (BasisIndex i = 0; i < amps.size(); ++i) {
        if (amps[i] == 0)
            continue;
        if (const auto ket = apply(op, BasisKet{i, amps[i]}))
            out.add(ket->index, ket->amplitude);
    }
    return out;
}

StateVector apply_term(const OperatorTerm& term, const StateVector& s)
{
    StateVector out = s;
    for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it)
        out = apply_ladder(*it, out);
    return out;
}

OperatorTerm normal_order(const OperatorTerm& term)
{
    OperatorTerm creators;
    OperatorTerm annihilators;
    for (const LadderOp& op : term.ops) {
        if (op.kind != LadderKind::Annihilate)
            creators.ops.push_back(LadderOp{LadderKind::Create, op.slot});
        if (op.kind != LadderKind::Create)
            annihilators.ops.push_back(LadderOp{LadderKind::Annihilate, op.slot});
    }
    creators.ops.insert(creators.ops.end(), annihilators.ops.begin(), annihilators.ops.end());
    return creators;
}

Count expectation(const OperatorTerm& term, const StateVector& s) { return inner_product(s, apply_term(term, s)); }

namespace {

/// A single occupation-basis state, without the dense vector.
struct BasisInput {
    Register reg;
    BasisIndex index;
};

BasisInput graph_basis(const Graph& g, RegisterKind kind, const Limits& limits)
{
    if (kind == RegisterKind::VertexSpace)
        throw InputError("the graph state lives in an edge register");
    Register reg =
        kind == RegisterKind::EdgeSpace ? Register::edge_space(g, limits) : Register::edge_subspace(g, limits);
    BasisIndex index = 0;
    for (const Edge& e : g.edges())
        index |= BasisIndex{1} << *reg.pair_slot(e.first, e.second);
    return {std::move(reg), index};
}

BasisInput ones_basis(const Graph& g, const Limits& limits)
{
    Register reg = Register::vertex_space(g, limits);
    const BasisIndex index = (BasisIndex{1} << reg.width()) - 1;
    return {std::move(reg), index};
}

} // namespace

StateVector graph_state(const Graph& g, RegisterKind kind, const Limits& limits)
{
    const BasisInput b = graph_basis(g, kind, limits);
    return StateVector::basis(b.reg, b.index);
}

StateVector all_ones_state(const Graph& g, const Limits& limits)
{
    const BasisInput b = ones_basis(g, limits);
    return StateVector::basis(b.reg, b.index);
}

namespace {

bool is_edge_matrix(MatrixKind k) { return k == MatrixKind::NEdge || k == MatrixKind::DEdge; }

/// How each step's matrix entry acts on the running ket.
enum class StepMode {
    /// Number operators, normally ordered: apply the annihilation half now,
    /// defer the creation half to the end of the term.
    NormalOrdered,
    /// Number operators as written.
    Plain,
    /// Annihilation operators.
    Annihilate,
};

/// Term-by-term expansion of entry (u,v) of X^l applied to a basis ket.
///
/// Operators on distinct slots act on different tensor factors and commute,
/// and two annihilators on one slot give zero in either order, so applying
/// the factors in walk order yields the same ket as applying the product
/// right to left. A term is abandoned as soon as its ket vanishes.
class TermExpansion {
public:
    TermExpansion(const Graph& g, const Register& reg, MatrixKind kind, StepMode mode, bool all_pairs,
                  std::size_t length, Vertex to, const Limits& limits)
        : g_(g), reg_(reg), kind_(kind), mode_(mode), all_pairs_(all_pairs), length_(length), to_(to),
          limits_(limits)
    {
    }

    /// Calls leaf(ket) for every term that survives. `prefix` slots are
    /// number operators standing left of the matrix entry (NormalOrdered only).
    template <typename Leaf>
    void run(Vertex from, BasisKet start, const std::vector<std::size_t>& prefix, Leaf&& leaf)
    {
        deferred_.clear();
        for (std::size_t slot : prefix) {
            const auto ket = apply(LadderOp{LadderKind::Annihilate, slot}, start);
            if (!ket)
                return;
            start = *ket;
            deferred_.push_back(slot);
        }
        if (length_ == 0) {
            if (from == to_)
                finish(start, leaf);
            return;
        }
        extend(from, 0, start, leaf);
    }

private:
    template <typename Leaf>
    void extend(Vertex at, std::size_t step, BasisKet ket, Leaf& leaf)
    {
        if (++visits_ > limits_.max_visits)
            throw BudgetExceeded("term expansion exceeded " + std::to_string(limits_.max_visits) +
                                 " visited nodes");
        const bool last = step + 1 == length_;
        auto visit = [&](Vertex next) {
            if (last && next != to_)
                return;
            std::size_t slot = 0;
            if (is_edge_matrix(kind_)) {
                const auto s = reg_.pair_slot(at, next);
                if (!s)
                    return; // entry is zero from the start
                slot = *s;
            } else {
                slot = reg_.vertex_slot(next);
            }
            const LadderKind op = mode_ == StepMode::Plain ? LadderKind::Number : LadderKind::Annihilate;
            const auto after = apply(LadderOp{op, slot}, ket);
            if (!after)
                return;
            if (mode_ == StepMode::NormalOrdered)
                deferred_.push_back(slot);
            if (last)
                finish(*after, leaf);
            else
                extend(next, step + 1, *after, leaf);
            if (mode_ == StepMode::NormalOrdered)
                deferred_.pop_back();
        };
        if (all_pairs_) {
            for (std::size_t b = 0; b < g_.vertex_count(); ++b)
                if (b != at.index)
                    visit(Vertex{b});
        } else {
            for (Vertex next : g_.neighbors(at))
                visit(next);
        }
    }

    template <typename Leaf>
    void finish(BasisKet ket, Leaf& leaf)
    {
        // Creation half of the normally ordered product, rightmost first.
        for (auto it = deferred_.rbegin(); it != deferred_.rend(); ++it) {
            const auto created = apply(LadderOp{LadderKind::Create, *it}, ket);
            if (!created)
                return;
            ket = *created;
        }
        leaf(ket);
    }

    const Graph& g_;
    const Register& reg_;
    MatrixKind kind_;
    StepMode mode_;
    bool all_pairs_;
    std::size_t length_;
    Vertex to_;
    Limits limits_;
    std::uint64_t visits_ = 0;
    std::vector<std::size_t> deferred_;
};

StateVector evolve_by_terms(TermExpansion& expansion, const StateVector& s, Vertex from)
{
    StateVector out(s.reg());
    const auto amps = s.amplitudes();
    for (BasisIndex i = 0; i < amps.size(); ++i) {
        if (amps[i] == 0)
            continue;
        expansion.run(from, BasisKet{i, amps[i]}, {}, [&](const BasisKet& ket) { out.add(ket.index, ket.amplitude); });
    }
    return out;
}

/// <b| X |b> for a basis state b.
Count basis_expectation(TermExpansion& expansion, BasisIndex b, Vertex from, const std::vector<std::size_t>& prefix)
{
    Count total = 0;
    expansion.run(from, BasisKet{b, 1}, prefix, [&](const BasisKet& ket) {
        if (ket.index == b)
            total += ket.amplitude;
    });
    return total;
}

/// X |b> for a basis state b, as a sparse map of exact amplitudes.
std::map<BasisIndex, Count> basis_evolve(TermExpansion& expansion, BasisIndex b, Vertex from)
{
    std::map<BasisIndex, Count> out;
    expansion.run(from, BasisKet{b, 1}, {}, [&](const BasisKet& ket) { out[ket.index] += ket.amplitude; });
    return out;
}

void require_endpoints(const Graph& g, Vertex from, Vertex to)
{
    g.require_vertex(from, "start vertex");
    g.require_vertex(to, "end vertex");
}

} // namespace

std::vector<WalkTerm> expand_walk_terms(const Graph& g, std::size_t length, Vertex from, Vertex to, MatrixKind kind,
                                        const Limits& limits)
{
    require_endpoints(g, from, to);
    if (length == 0)
        throw InputError("walk terms need length >= 1");
    const EdgeSlotIndex slots = g.slots();
    const LadderKind op =
        kind == MatrixKind::NEdge || kind == MatrixKind::MVertex ? LadderKind::Number : LadderKind::Annihilate;

    std::vector<WalkTerm> out;
    std::vector<Vertex> walk{from};
    OperatorTerm term;
    std::uint64_t visits = 0;
    std::function<void()> extend = [&] {
        if (++visits > limits.max_visits)
            throw BudgetExceeded("walk term expansion exceeded " + std::to_string(limits.max_visits) +
                                 " visited nodes");
        const Vertex at = walk.back();
        for (Vertex next : g.neighbors(at)) {
            const std::size_t slot = is_edge_matrix(kind) ? slots.slot(at, next) : next.index;
            walk.push_back(next);
            term.ops.push_back(LadderOp{op, slot});
            if (walk.size() == length + 1) {
                if (next == to)
                    out.push_back(WalkTerm{walk, term});
            } else {
                extend();
            }
            term.ops.pop_back();
            walk.pop_back();
        }
    };
    extend();
    return out;
}

Count normal_ordered_expectation(const Graph& g, std::size_t length, Vertex from, Vertex to, MatrixKind kind,
                                 const ObservableOptions& options, const Limits& limits)
{
    require_endpoints(g, from, to);
    if (kind == MatrixKind::NEdge) {
        const BasisInput psi =
            graph_basis(g, options.edge_subspace ? RegisterKind::EdgeSubspace : RegisterKind::EdgeSpace, limits);
        TermExpansion expansion(g, psi.reg, kind, StepMode::NormalOrdered, !options.edge_subspace, length, to,
                                limits);
        return basis_expectation(expansion, psi.index, from, {});
    }
    if (kind == MatrixKind::MVertex) {
        const BasisInput ones = ones_basis(g, limits);
        TermExpansion expansion(g, ones.reg, kind, StepMode::NormalOrdered, false, length, to, limits);
        std::vector<std::size_t> prefix;
        if (options.start_guarded)
            prefix.push_back(ones.reg.vertex_slot(from));
        return basis_expectation(expansion, ones.index, from, prefix);
    }
    throw InputError("normal-ordered expectation is defined for the N and M matrices");
}

Count plain_expectation(const Graph& g, std::size_t length, Vertex from, Vertex to, const Limits& limits)
{
    require_endpoints(g, from, to);
    const BasisInput psi = graph_basis(g, RegisterKind::EdgeSpace, limits);
    TermExpansion expansion(g, psi.reg, MatrixKind::NEdge, StepMode::Plain, true, length, to, limits);
    return basis_expectation(expansion, psi.index, from, {});
}

StateVector d_matrix_state(const Graph& g, std::size_t length, Vertex from, Vertex to, const Limits& limits)
{
    require_endpoints(g, from, to);
    if (length == 0)
        throw InputError("D-matrix power needs length >= 1");
    const StateVector psi = graph_state(g, RegisterKind::EdgeSpace, limits);
    TermExpansion expansion(g, psi.reg(), MatrixKind::DEdge, StepMode::Annihilate, true, length, to, limits);
    return evolve_by_terms(expansion, psi, from);
}

Count d_matrix_quadratic_form(const Graph& g, std::size_t length, Vertex from, Vertex to, const Limits& limits)
{
    require_endpoints(g, from, to);
    if (length == 0)
        throw InputError("D-matrix power needs length >= 1");
    const BasisInput psi = graph_basis(g, RegisterKind::EdgeSpace, limits);
    TermExpansion expansion(g, psi.reg, MatrixKind::DEdge, StepMode::Annihilate, true, length, to, limits);
    Count total = 0;
    for (const auto& [index, amplitude] : basis_evolve(expansion, psi.index, from))
        total += amplitude * amplitude;
    return total;
}

StateVector f_matrix_state(const Graph& g, std::size_t length, Vertex u, const Limits& limits)
{
    require_endpoints(g, u, u);
    if (length == 0)
        throw InputError("F-matrix power needs length >= 1");
    const StateVector ones = all_ones_state(g, limits);
    TermExpansion expansion(g, ones.reg(), MatrixKind::FVertex, StepMode::Annihilate, false, length, u, limits);
    return evolve_by_terms(expansion, ones, u);
}

Count f_matrix_amplitude(const Graph& g, std::size_t length, Vertex u, const Limits& limits)
{
    require_endpoints(g, u, u);
    if (length == 0)
        throw InputError("F-matrix power needs length >= 1");
    const BasisInput ones = ones_basis(g, limits);
    TermExpansion expansion(g, ones.reg, MatrixKind::FVertex, StepMode::Annihilate, false, length, u, limits);
    const auto out = basis_evolve(expansion, ones.index, u);
    const auto it = out.find(0);
    return it == out.end() ? Count(0) : it->second;
}

bool is_hamiltonian(const Graph& g, const Limits& limits)
{
    if (g.vertex_count() < 3)
        return false;
    return f_matrix_amplitude(g, g.vertex_count(), Vertex{0}, limits) > 0;
}

} // namespace trailcount::fock
