#include "trailcount/corpus.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>

namespace trailcount::corpus {

namespace {

constexpr std::size_t max_code_vertices = 11; // C(11,2) = 55 bits
constexpr std::size_t max_generated_vertices = 9;

using Masks = std::vector<std::uint32_t>;

std::size_t pair_bit(std::size_t n, std::size_t i, std::size_t j)
{
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Stable colour refinement; colours are ranks of (old colour, sorted
/// neighbour colours) signatures, so the partition order is invariant.
std::vector<std::size_t> refine(const Masks& adj)
{
    const std::size_t n = adj.size();
    std::vector<std::size_t> color(n);
    for (std::size_t v = 0; v < n; ++v)
        color[v] = static_cast<std::size_t>(__builtin_popcount(adj[v]));

    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (std::size_t w = 0; w < n; ++w)
                if ((adj[v] >> w) & 1U)
                    sig[v].second.push_back(color[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < n; ++v)
            color[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (sorted.size() == classes)
            break;
        classes = sorted.size();
    }
    return color;
}

std::uint64_t code_of(const Masks& adj, const std::vector<std::size_t>& order)
{
    const std::size_t n = adj.size();
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((adj[order[i]] >> order[j]) & 1U)
                code |= std::uint64_t{1} << pair_bit(n, i, j);
    return code;
}

std::uint64_t canonical_code_masks(const Masks& adj)
{
    const std::size_t n = adj.size();
    const std::vector<std::size_t> color = refine(adj);
    std::map<std::size_t, std::vector<std::size_t>> by_color;
    for (std::size_t v = 0; v < n; ++v)
        by_color[color[v]].push_back(v);
    std::vector<std::vector<std::size_t>> cells;
    for (auto& [c, members] : by_color)
        cells.push_back(members);

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::size_t> order(n);
    // Every ordering of each cell, cells laid out in colour order.
    auto search = [&](auto&& self, std::size_t cell, std::size_t offset) -> void {
        if (cell == cells.size()) {
            best = std::min(best, code_of(adj, order));
            return;
        }
        std::vector<std::size_t> members = cells[cell];
        do {
            std::copy(members.begin(), members.end(), order.begin() + static_cast<std::ptrdiff_t>(offset));
            self(self, cell + 1, offset + members.size());
        } while (std::next_permutation(members.begin(), members.end()));
    };
    search(search, 0, 0);
    return best;
}

Masks masks_of(const Graph& g)
{
    Masks adj(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.first.index] |= 1U << e.second.index;
        adj[e.second.index] |= 1U << e.first.index;
    }
    return adj;
}

Masks decode_masks(std::size_t n, std::uint64_t code)
{
    Masks adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((code >> pair_bit(n, i, j)) & 1U) {
                adj[i] |= 1U << j;
                adj[j] |= 1U << i;
            }
    return adj;
}

/// Codes of connected graphs on n vertices from those on n - 1: every
/// connected graph has a vertex whose removal leaves it connected.
std::set<std::uint64_t> augment(const std::set<std::uint64_t>& previous, std::size_t n)
{
    std::set<std::uint64_t> next;
    for (std::uint64_t parent : previous) {
        const Masks base = decode_masks(n - 1, parent);
        for (std::uint32_t subset = 1; subset < (1U << (n - 1)); ++subset) {
            Masks adj = base;
            adj.push_back(subset);
            for (std::size_t v = 0; v + 1 < n; ++v)
                if ((subset >> v) & 1U)
                    adj[v] |= 1U << (n - 1);
            next.insert(canonical_code_masks(adj));
        }
    }
    return next;
}

std::vector<Graph> decode_all(std::size_t n, const std::set<std::uint64_t>& codes)
{
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t c : codes)
        out.push_back(decode(n, c));
    return out;
}

void check_generated_size(std::size_t n)
{
    if (n == 0 || n > max_generated_vertices)
        throw InputError("connected graph generation supports 1 <= n <= " + std::to_string(max_generated_vertices));
}

} // namespace

std::uint64_t canonical_code(const Graph& g)
{
    if (g.vertex_count() > max_code_vertices)
        throw InputError("canonical codes support at most " + std::to_string(max_code_vertices) + " vertices");
    return canonical_code_masks(masks_of(g));
}

Graph decode(std::size_t n, std::uint64_t code)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((code >> pair_bit(n, i, j)) & 1U)
                edges.push_back(Edge{Vertex{i}, Vertex{j}});
    return Graph(n, std::move(edges));
}

std::vector<Graph> connected_graphs(std::size_t n)
{
    check_generated_size(n);
    std::set<std::uint64_t> level{0};
    for (std::size_t k = 2; k <= n; ++k)
        level = augment(level, k);
    return decode_all(n, level);
}

std::vector<Graph> connected_graphs_up_to(std::size_t n_max)
{
    check_generated_size(n_max);
    std::vector<Graph> out;
    std::set<std::uint64_t> level{0};
    for (std::size_t k = 1; k <= n_max; ++k) {
        if (k > 1)
            level = augment(level, k);
        auto graphs = decode_all(k, level);
        out.insert(out.end(), std::make_move_iterator(graphs.begin()), std::make_move_iterator(graphs.end()));
    }
    return out;
}

std::vector<Graph> random_graphs(std::size_t count, std::size_t n, double edge_probability, std::uint64_t seed)
{
    if (n == 0)
        throw InputError("random graphs need at least one vertex");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw InputError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    const long double scaled = static_cast<long double>(edge_probability) * 18446744073709551616.0L;
    const bool always = edge_probability >= 1.0;
    const std::uint64_t threshold = always ? 0 : static_cast<std::uint64_t>(scaled);

    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::uint64_t draw = rng();
                if (always || draw < threshold)
                    edges.push_back(Edge{Vertex{i}, Vertex{j}});
            }
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

std::vector<NamedGraph> named_graphs()
{
    return {
        {"C4-example", graphs::example_c4()},
        {"K2", graphs::complete(2)},
        {"K3", graphs::complete(3)},
        {"K4", graphs::complete(4)},
        {"K5", graphs::complete(5)},
        {"P3", graphs::path(3)},
        {"P5", graphs::path(5)},
        {"K1,3", graphs::star(3)},
        {"C5", graphs::cycle(5)},
        {"C6", graphs::cycle(6)},
        {"bowtie", graphs::bowtie()},
        {"tree7", Graph::from_labels(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}})},
        {"petersen", graphs::petersen()},
    };
}

} // namespace trailcount::corpus
