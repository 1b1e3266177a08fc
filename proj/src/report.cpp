#include "trailcount/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "trailcount/fock.hpp"
#include "trailcount/oracle.hpp"

namespace trailcount::harness {

std::string_view name(Kind k)
{
    switch (k) {
    case Kind::Walks: return "walks";
    case Kind::Trails: return "trails";
    case Kind::Paths: return "paths";
    case Kind::Euler: return "euler";
    case Kind::Cycles: return "cycles";
    case Kind::Hamiltonian: return "hamiltonian";
    }
    return "?";
}

std::string_view name(Engine e)
{
    switch (e) {
    case Engine::Oracle: return "oracle";
    case Engine::Symbolic: return "symbolic";
    case Engine::Fock: return "fock";
    }
    return "?";
}

Kind parse_kind(std::string_view text)
{
    for (Kind k : {Kind::Walks, Kind::Trails, Kind::Paths, Kind::Euler, Kind::Cycles, Kind::Hamiltonian})
        if (name(k) == text)
            return k;
    throw InputError("unknown kind '" + std::string(text) + "'");
}

Engine parse_engine(std::string_view text)
{
    for (Engine e : all_engines)
        if (name(e) == text)
            return e;
    throw InputError("unknown engine '" + std::string(text) + "'");
}

bool CountReport::has_note(std::string_view code) const
{
    for (const Note& n : notes)
        if (n.code == code)
            return true;
    return false;
}

bool CountReport::capacity_exhausted() const
{
    for (const auto& [engine, result] : engines)
        if (result.error_kind == "capacity" || result.error_kind == "budget")
            return true;
    return false;
}

bool CountReport::all_agree() const
{
    for (const auto& [pair, same] : agreement)
        if (!same)
            return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

EngineResult timed(const std::function<Count()>& compute)
{
    EngineResult r;
    const auto start = Clock::now();
    try {
        r.value = compute();
    } catch (const CapacityError& e) {
        r.error_kind = "capacity";
        r.error = e.what();
    } catch (const BudgetExceeded& e) {
        r.error_kind = "budget";
        r.error = e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

/// Runs `compute`, swallowing cap failures; for auxiliary values only.
std::optional<Count> try_aux(const std::function<Count()>& compute)
{
    try {
        return compute();
    } catch (const CapacityError&) {
    } catch (const BudgetExceeded&) {
    }
    return std::nullopt;
}

std::function<Count()> engine_function(const Graph& g, const Query& q, std::size_t length, Engine engine,
                                       const Limits& limits)
{
    using oracle::WalkClass;
    const Vertex u = q.from;
    const Vertex v = q.to;
    const bool guarded = q.variant == nilpotent::MVariant::StartGuarded;
    fock::ObservableOptions edge_opts;
    edge_opts.edge_subspace = q.edge_subspace;

    switch (q.kind) {
    case Kind::Walks:
        switch (engine) {
        case Engine::Oracle: return [=, &g] { return oracle::count(g, length, u, v, WalkClass::Walk, limits); };
        case Engine::Symbolic: return [=, &g] { return walk_count(g, length, u, v); };
        case Engine::Fock: return [=, &g] { return fock::plain_expectation(g, length, u, v, limits); };
        }
        break;
    case Kind::Trails:
    case Kind::Euler:
        switch (engine) {
        case Engine::Oracle: return [=, &g] { return oracle::count(g, length, u, v, WalkClass::Trail, limits); };
        case Engine::Symbolic:
            return [=, &g] { return nilpotent::trail_count_symbolic(g, length, u, v, limits); };
        case Engine::Fock:
            return [=, &g] {
                return fock::normal_ordered_expectation(g, length, u, v, fock::MatrixKind::NEdge, edge_opts, limits);
            };
        }
        break;
    case Kind::Paths:
        switch (engine) {
        case Engine::Oracle: return [=, &g] { return oracle::count(g, length, u, v, WalkClass::Path, limits); };
        case Engine::Symbolic:
            return [=, &g] { return nilpotent::path_count_symbolic(g, length, u, v, q.variant, limits); };
        case Engine::Fock:
            return [=, &g] {
                fock::ObservableOptions opts;
                opts.start_guarded = guarded;
                return fock::normal_ordered_expectation(g, length, u, v, fock::MatrixKind::MVertex, opts, limits);
            };
        }
        break;
    case Kind::Cycles:
        switch (engine) {
        case Engine::Oracle: return [=, &g] { return oracle::count(g, length, u, u, WalkClass::Path, limits); };
        case Engine::Symbolic: return [=, &g] { return nilpotent::cycle_count_symbolic(g, length, u, limits); };
        case Engine::Fock:
            return [=, &g] {
                return fock::normal_ordered_expectation(g, length, u, u, fock::MatrixKind::MVertex, {}, limits);
            };
        }
        break;
    case Kind::Hamiltonian:
        switch (engine) {
        case Engine::Oracle: return [=, &g] { return oracle::count_hamiltonian_cycles_through(g, u, true, limits); };
        case Engine::Symbolic: return [=, &g] { return nilpotent::cycle_count_symbolic(g, length, u, limits); };
        case Engine::Fock: return [=, &g] { return fock::f_matrix_amplitude(g, length, u, limits); };
        }
        break;
    }
    throw InputError("unsupported engine");
}

std::string format_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

} // namespace

CountReport run_count(const Graph& g, std::string graph_id, const Query& q, const Limits& limits)
{
    g.require_vertex(q.from, "start vertex");
    const bool closed = q.kind == Kind::Cycles || q.kind == Kind::Hamiltonian;
    if (!closed)
        g.require_vertex(q.to, "end vertex");
    if (q.engines.empty())
        throw InputError("no engines requested");

    std::size_t length = q.length;
    if (q.kind == Kind::Euler)
        length = g.edge_count();
    if (q.kind == Kind::Hamiltonian) {
        if (g.vertex_count() < 3)
            throw InputError("hamiltonian queries need at least 3 vertices");
        length = g.vertex_count();
    }
    if (q.kind == Kind::Paths && length == 0)
        throw InputError("path length must be at least 1");
    if (q.kind == Kind::Cycles && length < 3)
        throw InputError("cycle length must be at least 3");

    CountReport r;
    r.graph_id = std::move(graph_id);
    r.kind = q.kind;
    r.length = length;
    r.from = q.from;
    r.to = closed ? q.from : q.to;
    if (q.kind == Kind::Paths)
        r.variant = q.variant == nilpotent::MVariant::Literal ? "literal" : "guarded";

    for (Engine e : q.engines)
        r.engines[std::string(name(e))] = timed(engine_function(g, q, length, e, limits));

    for (std::size_t i = 0; i < std::size(all_engines); ++i)
        for (std::size_t j = i + 1; j < std::size(all_engines); ++j) {
            const auto a = r.engines.find(std::string(name(all_engines[i])));
            const auto b = r.engines.find(std::string(name(all_engines[j])));
            if (a == r.engines.end() || b == r.engines.end() || !a->second.value || !b->second.value)
                continue;
            r.agreement[a->first + ":" + b->first] = *a->second.value == *b->second.value;
        }

    auto value_of = [&](Engine e) -> std::optional<Count> {
        const auto it = r.engines.find(std::string(name(e)));
        return it == r.engines.end() ? std::nullopt : it->second.value;
    };
    auto wants = [&](Engine e) { return r.engines.count(std::string(name(e))) != 0; };

    if (q.kind == Kind::Paths) {
        if (wants(Engine::Oracle))
            if (const auto dni = try_aux([&] {
                    return oracle::count(g, length, r.from, r.to, oracle::WalkClass::DistinctNonInitial, limits);
                }))
                r.aux["oracle_distinct_non_initial"] = to_decimal(*dni);
        if (q.variant == nilpotent::MVariant::StartGuarded) {
            r.notes.push_back({std::string(codes::guarded_variant),
                               "start vertex generator multiplied in; not the original observable"});
        } else if (const auto paths = value_of(Engine::Oracle)) {
            for (Engine e : {Engine::Symbolic, Engine::Fock}) {
                const auto literal = value_of(e);
                if (literal && *literal > *paths) {
                    r.notes.push_back({std::string(codes::prop2_literal_overcount),
                                       "literal observable counts " + to_decimal(*literal) +
                                           " walks with distinct non-initial vertices; " + to_decimal(*paths) +
                                           " are paths"});
                    break;
                }
            }
        }
    }

    if ((q.kind == Kind::Trails || q.kind == Kind::Euler) && length > 0) {
        std::optional<Count> dform;
        if (wants(Engine::Fock))
            dform = try_aux([&] { return fock::d_matrix_quadratic_form(g, length, r.from, r.to, limits); });
        if (dform)
            r.aux["fock_dmatrix"] = to_decimal(*dform);
        if (wants(Engine::Oracle))
            if (const auto sq = try_aux([&] {
                    Count total = 0;
                    for (const auto& [set, t] : oracle::trail_edge_set_histogram(g, length, r.from, r.to, limits))
                        total += t * t;
                    return total;
                }))
                r.aux["oracle_sum_ts_squared"] = to_decimal(*sq);
        std::optional<Count> trails = value_of(Engine::Oracle);
        if (!trails)
            trails = value_of(Engine::Symbolic);
        if (dform && trails && *dform != *trails)
            r.notes.push_back({std::string(codes::dmatrix_squared),
                               "D-matrix form " + to_decimal(*dform) + " sums squared edge-set multiplicities; " +
                                   to_decimal(*trails) + " trails"});
    }

    if (q.kind == Kind::Cycles && length == g.vertex_count() && wants(Engine::Fock))
        if (const auto f = try_aux([&] { return fock::f_matrix_amplitude(g, length, r.from, limits); }))
            r.aux["fock_f_amplitude"] = to_decimal(*f);

    if (q.kind == Kind::Hamiltonian) {
        if (wants(Engine::Oracle))
            if (const auto undirected =
                    try_aux([&] { return oracle::count_hamiltonian_cycles_through(g, r.from, false, limits); }))
                r.aux["oracle_undirected"] = to_decimal(*undirected);
        for (Engine e : {Engine::Fock, Engine::Oracle, Engine::Symbolic})
            if (const auto value = value_of(e)) {
                r.aux["hamiltonian"] = *value > 0 ? "true" : "false";
                break;
            }
    }

    if (!r.all_agree() && !r.has_note(codes::prop2_literal_overcount))
        r.notes.push_back({std::string(codes::engine_disagreement), "engines report different values"});

    return r;
}

std::string content_id(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json to_json(const CountReport& r)
{
    nlohmann::json engines = nlohmann::json::object();
    for (const auto& [engine, res] : r.engines) {
        nlohmann::json e = {{"wall_ms", format_ms(res.wall_ms)}};
        if (res.value)
            e["value"] = to_decimal(*res.value);
        else {
            e["error"] = res.error;
            e["error_kind"] = res.error_kind;
        }
        engines[engine] = std::move(e);
    }
    nlohmann::json notes = nlohmann::json::array();
    for (const Note& n : r.notes)
        notes.push_back({{"code", n.code}, {"detail", n.detail}});
    return {
        {"graph_id", r.graph_id},
        {"kind", name(r.kind)},
        {"length", r.length},
        {"from", r.from.label()},
        {"to", r.to.label()},
        {"variant", r.variant},
        {"engines", std::move(engines)},
        {"agreement", r.agreement},
        {"aux", r.aux},
        {"notes", std::move(notes)},
    };
}

CountReport report_from_json(const nlohmann::json& j)
{
    try {
        CountReport r;
        r.graph_id = j.at("graph_id").get<std::string>();
        r.kind = parse_kind(j.at("kind").get<std::string>());
        r.length = j.at("length").get<std::size_t>();
        r.from = Vertex::from_label(j.at("from").get<std::size_t>());
        r.to = Vertex::from_label(j.at("to").get<std::size_t>());
        r.variant = j.at("variant").get<std::string>();
        for (const auto& [engine, e] : j.at("engines").items()) {
            EngineResult res;
            res.wall_ms = std::stod(e.at("wall_ms").get<std::string>());
            if (e.contains("value"))
                res.value = count_from_decimal(e.at("value").get<std::string>());
            else {
                res.error = e.at("error").get<std::string>();
                res.error_kind = e.at("error_kind").get<std::string>();
            }
            r.engines[engine] = std::move(res);
        }
        r.agreement = j.at("agreement").get<std::map<std::string, bool>>();
        r.aux = j.at("aux").get<std::map<std::string, std::string>>();
        for (const auto& n : j.at("notes"))
            r.notes.push_back({n.at("code").get<std::string>(), n.at("detail").get<std::string>()});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
}

std::string to_csv(const CountReport& r)
{
    std::ostringstream out;
    out << "graph_id,kind,length,from,to,variant,engine,value,error_kind,wall_ms\n";
    for (const auto& [engine, res] : r.engines)
        out << r.graph_id << ',' << name(r.kind) << ',' << r.length << ',' << r.from.label() << ','
            << r.to.label() << ',' << r.variant << ',' << engine << ',' << (res.value ? to_decimal(*res.value) : "")
            << ',' << res.error_kind << ',' << format_ms(res.wall_ms) << '\n';
    return out.str();
}

std::string to_text(const CountReport& r)
{
    std::ostringstream out;
    out << name(r.kind) << " of length " << r.length << " from " << r.from.label() << " to " << r.to.label();
    if (!r.variant.empty())
        out << " (" << r.variant << ")";
    out << " in " << r.graph_id << '\n';
    for (const auto& [engine, res] : r.engines) {
        out << "  " << engine << ": ";
        if (res.value)
            out << to_decimal(*res.value);
        else
            out << "error (" << res.error_kind << "): " << res.error;
        out << "  [" << format_ms(res.wall_ms) << " ms]\n";
    }
    for (const auto& [pair, same] : r.agreement)
        out << "  agree " << pair << ": " << (same ? "yes" : "no") << '\n';
    for (const auto& [key, value] : r.aux)
        out << "  " << key << " = " << value << '\n';
    for (const Note& n : r.notes)
        out << "  note " << n.code << ": " << n.detail << '\n';
    return out.str();
}

} // namespace trailcount::harness
