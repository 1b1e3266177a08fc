#include "trailcount/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace trailcount::oracle {

std::string_view name(WalkClass c)
{
    switch (c) {
    case WalkClass::Walk: return "walk";
    case WalkClass::Trail: return "trail";
    case WalkClass::Path: return "path";
    case WalkClass::DistinctNonInitial: return "distinct-non-initial";
    case WalkClass::StartOnceTrailEdgeSet: return "start-once-trail-edge-set";
    }
    return "?";
}

namespace {

constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> distances_to(const Graph& g, Vertex target)
{
    std::vector<std::size_t> dist(g.vertex_count(), unreachable);
    std::queue<Vertex> frontier;
    dist[target.index] = 0;
    frontier.push(target);
    while (!frontier.empty()) {
        const Vertex a = frontier.front();
        frontier.pop();
        for (Vertex b : g.neighbors(a))
            if (dist[b.index] == unreachable) {
                dist[b.index] = dist[a.index] + 1;
                frontier.push(b);
            }
    }
    return dist;
}

std::vector<std::size_t> checked_distances(const Graph& g, Vertex from, Vertex to)
{
    g.require_vertex(from, "start vertex");
    g.require_vertex(to, "end vertex");
    return distances_to(g, to);
}

/// Depth-first search over walks of a fixed length, pruned by the class
/// predicate and by graph distance to the target. Leaves are reported in
/// lexicographic order.
class WalkSearch {
public:
    using Visitor = std::function<void(const std::vector<Vertex>&)>;

    WalkSearch(const Graph& g, std::size_t length, Vertex from, Vertex to, WalkClass c, const Limits& limits)
        : g_(g), length_(length), from_(from), to_(to), class_(c), limits_(limits),
          dist_(checked_distances(g, from, to)), edge_used_(g.edge_count(), 0),
          vertex_marked_(g.vertex_count(), 0)
    {
        if (class_ == WalkClass::StartOnceTrailEdgeSet)
            class_ = WalkClass::Trail;
    }

    void run(const Visitor& visit)
    {
        visit_ = &visit;
        if (length_ == 0) {
            if (from_ == to_ && class_ != WalkClass::Path)
                visit(std::vector<Vertex>{from_});
            return;
        }
        if (class_ == WalkClass::Path && from_ == to_ && length_ < 3)
            return;
        walk_.assign(1, from_);
        if (class_ == WalkClass::Path)
            vertex_marked_[from_.index] = 1;
        extend();
    }

private:
    void extend()
    {
        if (++visits_ > limits_.max_visits)
            throw BudgetExceeded("enumeration exceeded " + std::to_string(limits_.max_visits) + " visited nodes");
        const Vertex at = walk_.back();
        const std::size_t step = walk_.size(); // index of the vertex being chosen
        const std::size_t remaining = length_ - step;
        for (Vertex next : g_.neighbors(at)) {
            if (dist_[next.index] == unreachable || dist_[next.index] > remaining)
                continue;
            if (remaining == 0 && next != to_)
                continue;
            std::size_t edge = 0;
            if (class_ == WalkClass::Trail) {
                edge = *g_.edge_id(at, next);
                if (edge_used_[edge])
                    continue;
            }
            const bool closes_cycle = class_ == WalkClass::Path && remaining == 0 && next == from_;
            if ((class_ == WalkClass::Path || class_ == WalkClass::DistinctNonInitial) &&
                vertex_marked_[next.index] && !closes_cycle)
                continue;

            walk_.push_back(next);
            if (class_ == WalkClass::Trail)
                edge_used_[edge] = 1;
            if (class_ == WalkClass::Path || class_ == WalkClass::DistinctNonInitial)
                ++vertex_marked_[next.index];

            if (remaining == 0)
                (*visit_)(walk_);
            else
                extend();

            if (class_ == WalkClass::Path || class_ == WalkClass::DistinctNonInitial)
                --vertex_marked_[next.index];
            if (class_ == WalkClass::Trail)
                edge_used_[edge] = 0;
            walk_.pop_back();
        }
    }

    const Graph& g_;
    std::size_t length_;
    Vertex from_;
    Vertex to_;
    WalkClass class_;
    Limits limits_;
    std::vector<std::size_t> dist_;
    std::vector<char> edge_used_;
    std::vector<int> vertex_marked_;
    std::vector<Vertex> walk_;
    std::uint64_t visits_ = 0;
    const Visitor* visit_ = nullptr;
};

EdgeSet edge_set_of(const Graph& g, const std::vector<Vertex>& walk)
{
    const EdgeSlotIndex slots = g.slots();
    EdgeSet s;
    s.reserve(walk.size());
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        s.push_back(slots.slot(walk[i], walk[i + 1]));
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

bool satisfies(const Graph& g, const WalkSeq& walk, WalkClass c)
{
    const auto& w = walk.vertices;
    if (w.empty())
        return false;
    for (Vertex v : w)
        if (!g.contains(v))
            return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!g.adjacent(w[i], w[i + 1]))
            return false;
    const std::size_t l = walk.length();

    switch (c) {
    case WalkClass::Walk: return true;
    case WalkClass::Trail: {
        const EdgeSet s = edge_set_of(g, w);
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    }
    case WalkClass::Path: {
        const bool closed = w.front() == w.back();
        if (closed && l < 3)
            return false;
        std::set<Vertex> seen(w.begin(), closed ? w.end() - 1 : w.end());
        return seen.size() == (closed ? l : l + 1);
    }
    case WalkClass::DistinctNonInitial: {
        std::set<Vertex> seen(w.begin() + 1, w.end());
        return seen.size() == l;
    }
    case WalkClass::StartOnceTrailEdgeSet: {
        if (!satisfies(g, walk, WalkClass::Trail))
            return false;
        const EdgeSet mine = edge_set_of(g, w);
        for (const WalkSeq& other : enumerate(g, l, w.front(), w.back(), WalkClass::Trail))
            if (edge_set_of(g, other.vertices) == mine)
                return other == walk;
        return false;
    }
    }
    return false;
}

std::vector<WalkSeq> enumerate(const Graph& g, std::size_t length, Vertex from, Vertex to, WalkClass c,
                               const Limits& limits)
{
    std::vector<WalkSeq> out;
    WalkSearch search(g, length, from, to, c, limits);
    if (c == WalkClass::StartOnceTrailEdgeSet) {
        std::set<EdgeSet> seen;
        search.run([&](const std::vector<Vertex>& w) {
            if (seen.insert(edge_set_of(g, w)).second)
                out.push_back(WalkSeq{w});
        });
    } else {
        search.run([&](const std::vector<Vertex>& w) { out.push_back(WalkSeq{w}); });
    }
    return out;
}

Count count(const Graph& g, std::size_t length, Vertex from, Vertex to, WalkClass c, const Limits& limits)
{
    if (c == WalkClass::StartOnceTrailEdgeSet)
        return Count(trail_edge_set_histogram(g, length, from, to, limits).size());
    std::uint64_t n = 0;
    WalkSearch(g, length, from, to, c, limits).run([&](const std::vector<Vertex>&) { ++n; });
    return Count(n);
}

Count count_closed_euler_trails(const Graph& g, Vertex u, const Limits& limits)
{
    return count(g, g.edge_count(), u, u, WalkClass::Trail, limits);
}

Count count_hamiltonian_cycles_through(const Graph& g, Vertex u, bool directed, const Limits& limits)
{
    g.require_vertex(u);
    const std::size_t n = g.vertex_count();
    if (n < 3)
        return 0;

    std::vector<char> visited(n, 0);
    visited[u.index] = 1;
    std::uint64_t closed = 0;
    std::uint64_t visits = 0;

    std::function<void(Vertex, std::size_t)> extend = [&](Vertex at, std::size_t depth) {
        if (++visits > limits.max_visits)
            throw BudgetExceeded("hamiltonian search exceeded " + std::to_string(limits.max_visits) +
                                 " visited nodes");
        if (depth == n) {
            if (g.adjacent(at, u))
                ++closed;
            return;
        }
        for (Vertex next : g.neighbors(at)) {
            if (visited[next.index])
                continue;
            visited[next.index] = 1;
            extend(next, depth + 1);
            visited[next.index] = 0;
        }
    };
    extend(u, 1);

    return directed ? Count(closed) : Count(closed / 2);
}

std::map<EdgeSet, Count> trail_edge_set_histogram(const Graph& g, std::size_t length, Vertex from, Vertex to,
                                                  const Limits& limits)
{
    std::map<EdgeSet, Count> histogram;
    WalkSearch(g, length, from, to, WalkClass::Trail, limits).run([&](const std::vector<Vertex>& w) {
        histogram[edge_set_of(g, w)] += 1;
    });
    return histogram;
}

Count MemoizedOracle::count(std::size_t length, Vertex from, Vertex to, WalkClass c) const
{
    const Key key{length, from.index, to.index, c};
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    Count value = oracle::count(graph_, length, from, to, c, limits_);
    std::lock_guard lock(mutex_);
    return memo_.emplace(key, std::move(value)).first->second;
}

} // namespace trailcount::oracle
