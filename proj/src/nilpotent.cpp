#include "trailcount/nilpotent.hpp"

#include <bit>

#include <json.hpp>

namespace trailcount::nilpotent {

Monomial Monomial::generator(std::size_t index)
{
    if (index >= capacity)
        throw CapacityError("generator index " + std::to_string(index) + " exceeds monomial capacity " +
                            std::to_string(capacity));
    Monomial m;
    m.words_[index / 64] = std::uint64_t{1} << (index % 64);
    return m;
}

std::size_t Monomial::degree() const
{
    std::size_t d = 0;
    for (std::uint64_t w : words_)
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<std::size_t> Monomial::generators() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::optional<Monomial> multiply(const Monomial& a, const Monomial& b)
{
    Monomial out;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        if ((a.words_[w] & b.words_[w]) != 0)
            return std::nullopt;
        out.words_[w] = a.words_[w] | b.words_[w];
    }
    return out;
}

bool operator<(const Monomial& a, const Monomial& b)
{
    for (std::size_t w = a.words_.size(); w-- > 0;)
        if (a.words_[w] != b.words_[w])
            return a.words_[w] < b.words_[w];
    return false;
}

Polynomial Polynomial::constant(Count c)
{
    Polynomial p;
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::generator(std::size_t index)
{
    Polynomial p;
    p.add_term(Monomial::generator(index), 1);
    return p;
}

Count Polynomial::coefficient_sum() const
{
    Count total = 0;
    for (const auto& [m, c] : terms_)
        total += c;
    return total;
}

Count Polynomial::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Count(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Count& c)
{
    if (c.is_zero())
        return;
    terms_[m] += c;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        terms_[m] += c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            if (const auto m = multiply(ma, mb))
                out.terms_[*m] += ca * cb;
    return out;
}

nlohmann::json to_json(const Polynomial& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({{"generators", m.generators()}, {"coeff", to_decimal(c)}});
    return out;
}

PolyMatrix PolyMatrix::identity(std::size_t n)
{
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Polynomial::constant(1);
    return m;
}

std::size_t PolyMatrix::live_monomials() const
{
    std::size_t total = 0;
    for (const Polynomial& p : entries_)
        total += p.size();
    return total;
}

namespace {

void check_budget(std::size_t live, const Limits& limits)
{
    if (live > limits.max_monomials)
        throw CapacityError("symbolic engine holds " + std::to_string(live) + " monomials, cap is " +
                            std::to_string(limits.max_monomials));
}

/// e_from * m^l as a row vector; cheaper than the full power when only one
/// row is needed.
std::vector<Polynomial> power_row(const PolyMatrix& m, std::size_t length, Vertex from, const Limits& limits)
{
    const std::size_t n = m.size();
    std::vector<Polynomial> row(n);
    row[from.index] = Polynomial::constant(1);
    for (std::size_t step = 0; step < length; ++step) {
        std::vector<Polynomial> next(n);
        std::size_t live = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (row[k].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!m(k, j).is_zero())
                    next[j] += row[k] * m(k, j);
        }
        for (const Polynomial& p : next)
            live += p.size();
        check_budget(live, limits);
        row = std::move(next);
    }
    return row;
}

} // namespace

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const Limits& limits)
{
    const std::size_t n = a.size();
    if (b.size() != n)
        throw InputError("matrix dimensions differ");
    PolyMatrix out(n);
    std::size_t live = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial& entry = out(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero())
                    entry += a(i, k) * b(k, j);
            live += entry.size();
            check_budget(live, limits);
        }
    return out;
}

PolyMatrix formal_adjacency_edges(const Graph& g)
{
    const EdgeSlotIndex slots = g.slots();
    PolyMatrix m(g.vertex_count());
    for (const Edge& e : g.edges()) {
        const Polynomial x = Polynomial::generator(slots.slot(e.first, e.second));
        m(e.first.index, e.second.index) = x;
        m(e.second.index, e.first.index) = x;
    }
    return m;
}

PolyMatrix matrix_power_nilpotent(const PolyMatrix& m, std::size_t length, const Limits& limits)
{
    if (length == 0)
        return PolyMatrix::identity(m.size());
    PolyMatrix result = m;
    for (std::size_t step = 1; step < length; ++step)
        result = multiply(m, result, limits);
    return result;
}

Count trail_count_symbolic(const Graph& g, std::size_t length, Vertex from, Vertex to, const Limits& limits)
{
    g.require_vertex(from, "start vertex");
    g.require_vertex(to, "end vertex");
    return power_row(formal_adjacency_edges(g), length, from, limits)[to.index].coefficient_sum();
}

Count euler_trail_count_symbolic(const Graph& g, Vertex from, Vertex to, const Limits& limits)
{
    return trail_count_symbolic(g, g.edge_count(), from, to, limits);
}

PolyMatrix vertex_observable_matrix(const Graph& g, MVariant variant, Vertex start)
{
    g.require_vertex(start, "start vertex");
    PolyMatrix m(g.vertex_count());
    for (const Edge& e : g.edges()) {
        // Both branches of the max/min split name the destination vertex.
        m(e.first.index, e.second.index) = Polynomial::generator(e.second.index);
        m(e.second.index, e.first.index) = Polynomial::generator(e.first.index);
    }
    if (variant == MVariant::StartGuarded) {
        const Polynomial guard = Polynomial::generator(start.index);
        for (std::size_t b = 0; b < g.vertex_count(); ++b)
            if (!m(start.index, b).is_zero())
                m(start.index, b) = guard * m(start.index, b);
    }
    return m;
}

Count path_count_symbolic(const Graph& g, std::size_t length, Vertex from, Vertex to, MVariant variant,
                          const Limits& limits)
{
    g.require_vertex(to, "end vertex");
    if (length == 0)
        throw InputError("path length must be at least 1");
    const PolyMatrix m = vertex_observable_matrix(g, variant, from);
    return power_row(m, length, from, limits)[to.index].coefficient_sum();
}

Count cycle_count_symbolic(const Graph& g, std::size_t length, Vertex u, const Limits& limits)
{
    if (length < 3)
        throw InputError("cycle length must be at least 3");
    return path_count_symbolic(g, length, u, u, MVariant::Literal, limits);
}

} // namespace trailcount::nilpotent
