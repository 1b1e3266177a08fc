#include "trailcount/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace trailcount {

std::size_t EdgeSlotIndex::slot(Vertex a, Vertex b) const
{
    if (a == b || a.index >= n_ || b.index >= n_)
        throw InputError("no edge slot for pair (" + std::to_string(a.label()) + "," +
                         std::to_string(b.label()) + ")");
    const std::size_t i = std::min(a.index, b.index);
    const std::size_t j = std::max(a.index, b.index);
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

Edge EdgeSlotIndex::pair(std::size_t slot) const
{
    if (slot >= size())
        throw InputError("edge slot " + std::to_string(slot) + " out of range");
    std::size_t i = 0;
    std::size_t row = n_ - 1;
    while (slot >= row) {
        slot -= row;
        ++i;
        --row;
    }
    return Edge{Vertex{i}, Vertex{i + 1 + slot}};
}

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), adjacency_(n * n, 0), neighbors_(n), edge_ids_(n * n, 0)
{
    if (n == 0)
        throw InputError("graph must have at least one vertex");
    for (Edge& e : edges) {
        if (e.first.index >= n || e.second.index >= n)
            throw InputError("edge endpoint out of range 1.." + std::to_string(n));
        if (e.first == e.second)
            throw InputError("self-loop at vertex " + std::to_string(e.first.label()));
        if (e.second < e.first)
            std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    for (std::size_t id = 0; id < edges_.size(); ++id) {
        const auto [a, b] = edges_[id];
        adjacency_[a.index * n + b.index] = adjacency_[b.index * n + a.index] = 1;
        edge_ids_[a.index * n + b.index] = edge_ids_[b.index * n + a.index] = id;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (adjacency_[a * n + b])
                neighbors_[a].push_back(Vertex{b});
}

Graph Graph::from_labels(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& labels)
{
    std::vector<Edge> edges;
    edges.reserve(labels.size());
    for (const auto& [a, b] : labels) {
        if (a == 0 || b == 0)
            throw InputError("vertex labels start at 1");
        edges.push_back(Edge{Vertex::from_label(a), Vertex::from_label(b)});
    }
    return Graph(n, std::move(edges));
}

std::optional<std::size_t> Graph::edge_id(Vertex a, Vertex b) const
{
    if (!contains(a) || !contains(b) || !adjacent(a, b))
        return std::nullopt;
    return edge_ids_[a.index * n_ + b.index];
}

void Graph::require_vertex(Vertex v, const char* what) const
{
    if (!contains(v))
        throw InputError(std::string(what) + " " + std::to_string(v.label()) + " out of range 1.." +
                         std::to_string(n_));
}

bool Graph::connected() const
{
    std::vector<char> seen(n_, 0);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const std::size_t a = frontier.front();
        frontier.pop();
        for (Vertex b : neighbors_[a]) {
            if (!seen[b.index]) {
                seen[b.index] = 1;
                ++reached;
                frontier.push(b.index);
            }
        }
    }
    return reached == n_;
}

CountMatrix CountMatrix::identity(std::size_t n)
{
    CountMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

CountMatrix operator*(const CountMatrix& a, const CountMatrix& b)
{
    const std::size_t n = a.size();
    CountMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Count& lhs = a(i, k);
            if (lhs.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += lhs * b(k, j);
        }
    return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')
            ++end;
        if (end > pos)
            tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

std::size_t parse_label(std::string_view token, std::size_t line_no)
{
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw InputError("line " + std::to_string(line_no) + ": not an integer: '" + std::string(token) + "'");
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::optional<std::size_t> declared;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t max_label = 0;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty())
            continue;
        if (tokens[0] == "n") {
            if (tokens.size() != 2)
                throw InputError("line " + std::to_string(line_no) + ": header must be 'n <count>'");
            if (declared || !pairs.empty())
                throw InputError("line " + std::to_string(line_no) + ": header must precede edges and appear once");
            declared = parse_label(tokens[1], line_no);
            if (*declared == 0)
                throw InputError("line " + std::to_string(line_no) + ": vertex count must be positive");
            continue;
        }
        if (tokens.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
        const std::size_t a = parse_label(tokens[0], line_no);
        const std::size_t b = parse_label(tokens[1], line_no);
        if (a == 0 || b == 0)
            throw InputError("line " + std::to_string(line_no) + ": vertex labels start at 1");
        if (a == b)
            throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(a));
        if (declared && std::max(a, b) > *declared)
            throw InputError("line " + std::to_string(line_no) + ": vertex " + std::to_string(std::max(a, b)) +
                             " exceeds declared n=" + std::to_string(*declared));
        max_label = std::max({max_label, a, b});
        pairs.emplace_back(a, b);
    }

    const std::size_t n = declared.value_or(max_label);
    if (n == 0)
        throw InputError("empty edge list without an 'n <count>' header");
    return Graph::from_labels(n, pairs);
}

Graph load_edge_list(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Graph& g)
{
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.first.label()) + " " + std::to_string(e.second.label()) + "\n";
    return out;
}

CountMatrix adjacency_matrix(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    CountMatrix a(n);
    for (const Edge& e : g.edges()) {
        a(e.first.index, e.second.index) = 1;
        a(e.second.index, e.first.index) = 1;
    }
    return a;
}

CountMatrix walk_count_matrix(const Graph& g, std::size_t length)
{
    // Square-and-multiply; lengths in the thousands stay cheap.
    CountMatrix result = CountMatrix::identity(g.vertex_count());
    CountMatrix base = adjacency_matrix(g);
    while (length > 0) {
        if (length & 1U)
            result = result * base;
        length >>= 1U;
        if (length > 0)
            base = base * base;
    }
    return result;
}

Count walk_count(const Graph& g, std::size_t length, Vertex from, Vertex to)
{
    g.require_vertex(from, "start vertex");
    g.require_vertex(to, "end vertex");
    return walk_count_matrix(g, length).at(from, to);
}

nlohmann::json to_json(const CountMatrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.size(); ++j)
            row.push_back(to_decimal(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace graphs {

Graph cycle(std::size_t n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back(Edge{Vertex{i}, Vertex{(i + 1) % n}});
    return Graph(n, std::move(edges));
}

Graph complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.push_back(Edge{Vertex{i}, Vertex{j}});
    return Graph(n, std::move(edges));
}

Graph path(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back(Edge{Vertex{i}, Vertex{i + 1}});
    return Graph(n, std::move(edges));
}

Graph star(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.push_back(Edge{Vertex{0}, Vertex{i}});
    return Graph(leaves + 1, std::move(edges));
}

Graph empty(std::size_t n) { return Graph(n, {}); }

Graph petersen()
{
    // Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram 6..10.
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < 5; ++i) {
        e.emplace_back(i + 1, (i + 1) % 5 + 1);
        e.emplace_back(i + 1, i + 6);
        e.emplace_back(i + 6, (i + 2) % 5 + 6);
    }
    return Graph::from_labels(10, e);
}

Graph bowtie() { return Graph::from_labels(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

Graph example_c4() { return Graph::from_labels(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }

} // namespace graphs

} // namespace trailcount
