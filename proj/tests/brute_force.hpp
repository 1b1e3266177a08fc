#pragma once

// Test-only reference: enumerate every vertex sequence of the right length
// and filter it with predicates written straight from the definitions. No
// pruning, no shared code with the library's search.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "trailcount/graph.hpp"

namespace brute {

using Seq = std::vector<std::size_t>; // 0-based vertex indices

inline bool is_walk(const trailcount::Graph& g, const Seq& s)
{
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (!g.adjacent(trailcount::Vertex{s[i]}, trailcount::Vertex{s[i + 1]}))
            return false;
    return true;
}

inline std::vector<std::pair<std::size_t, std::size_t>> edges_of(const Seq& s)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        e.emplace_back(std::min(s[i], s[i + 1]), std::max(s[i], s[i + 1]));
    return e;
}

inline bool is_trail(const Seq& s)
{
    auto e = edges_of(s);
    std::set<std::pair<std::size_t, std::size_t>> distinct(e.begin(), e.end());
    return distinct.size() == e.size();
}

inline bool is_path(const Seq& s)
{
    const std::size_t l = s.size() - 1;
    if (s.front() == s.back()) {
        if (l < 3)
            return false;
        std::set<std::size_t> distinct(s.begin(), s.end() - 1);
        return distinct.size() == l;
    }
    std::set<std::size_t> distinct(s.begin(), s.end());
    return distinct.size() == l + 1;
}

inline bool is_distinct_non_initial(const Seq& s)
{
    std::set<std::size_t> distinct(s.begin() + 1, s.end());
    return distinct.size() == s.size() - 1;
}

/// All walks of length l >= 1 from u to v, in lexicographic order.
inline std::vector<Seq> walks(const trailcount::Graph& g, std::size_t l, std::size_t u, std::size_t v)
{
    const std::size_t n = g.vertex_count();
    std::vector<Seq> out;
    Seq mid(l - 1, 0);
    while (true) {
        Seq s{u};
        s.insert(s.end(), mid.begin(), mid.end());
        s.push_back(v);
        if (is_walk(g, s))
            out.push_back(s);
        std::size_t k = mid.size();
        while (k > 0 && ++mid[k - 1] == n) {
            mid[k - 1] = 0;
            --k;
        }
        if (k == 0)
            break;
    }
    return out;
}

template <typename Pred>
std::size_t count(const trailcount::Graph& g, std::size_t l, std::size_t u, std::size_t v, Pred pred)
{
    std::size_t c = 0;
    for (const Seq& s : walks(g, l, u, v))
        if (pred(s))
            ++c;
    return c;
}

/// Closed walks 0 -> ... -> 0 visiting each vertex once, over all orderings.
inline std::size_t directed_hamiltonian_through(const trailcount::Graph& g, std::size_t u)
{
    const std::size_t n = g.vertex_count();
    if (n < 3)
        return 0;
    Seq rest;
    for (std::size_t v = 0; v < n; ++v)
        if (v != u)
            rest.push_back(v);
    std::size_t c = 0;
    do {
        Seq s{u};
        s.insert(s.end(), rest.begin(), rest.end());
        s.push_back(u);
        if (is_walk(g, s))
            ++c;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return c;
}

/// Edge-set histogram of trails, edge sets as sorted pair lists.
inline std::map<std::vector<std::pair<std::size_t, std::size_t>>, std::size_t>
trail_histogram(const trailcount::Graph& g, std::size_t l, std::size_t u, std::size_t v)
{
    std::map<std::vector<std::pair<std::size_t, std::size_t>>, std::size_t> h;
    for (const Seq& s : walks(g, l, u, v))
        if (is_trail(s)) {
            auto e = edges_of(s);
            std::sort(e.begin(), e.end());
            ++h[e];
        }
    return h;
}

} // namespace brute
