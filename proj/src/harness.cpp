#include "trailcount/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "trailcount/fock.hpp"
#include "trailcount/oracle.hpp"

namespace trailcount::harness {

std::size_t ExampleReport::reproduced() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.ok; }));
}

namespace {

using namespace trailcount::literals;

std::string matrix_rows(const CountMatrix& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0)
            out += '/';
        for (std::size_t j = 0; j < m.size(); ++j)
            out += to_decimal(m(i, j));
    }
    return out;
}

/// "e12*e13^2": slot multiplicities of an unreduced walk term.
std::string edge_monomial(const fock::OperatorTerm& term, const EdgeSlotIndex& slots)
{
    std::map<std::size_t, int> power;
    for (const fock::LadderOp& op : term.ops)
        ++power[op.slot];
    std::string out;
    for (const auto& [slot, k] : power) {
        const Edge e = slots.pair(slot);
        if (!out.empty())
            out += '*';
        out += "e" + std::to_string(e.first.label()) + std::to_string(e.second.label());
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const std::string& p : parts)
        out += (out.empty() ? "" : " + ") + p;
    return out;
}

std::string format_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

} // namespace

ExampleReport run_worked_example(const Graph& g, const Limits& limits)
{
    const auto start = std::chrono::steady_clock::now();
    ExampleReport report;
    auto add = [&](std::string name, std::string expected, const std::function<std::string()>& actual) {
        ExampleCheck c{std::move(name), std::move(expected), {}, false};
        try {
            c.actual = actual();
            c.ok = c.actual == c.expected;
        } catch (const std::exception& e) {
            c.actual = std::string("error: ") + e.what();
        }
        report.checks.push_back(std::move(c));
    };

    add("adjacency matrix A(C4)", "0110/1001/1001/0110", [&] { return matrix_rows(adjacency_matrix(g)); });
    add("walk monomials of entry (1,2) of the cubed formal adjacency", "e12*e13^2 + e12*e24^2 + e12^3 + e13*e24*e34",
        [&] {
            std::vector<std::string> monomials;
            for (const auto& t : fock::expand_walk_terms(g, 3, 1_v, 2_v, fock::MatrixKind::NEdge, limits))
                monomials.push_back(edge_monomial(t.term, g.slots()));
            std::sort(monomials.begin(), monomials.end());
            return join(monomials);
        });
    add("w(C4,3;1,2)", "4", [&] { return to_decimal(walk_count(g, 3, 1_v, 2_v)); });
    add("graph state", "|110011>", [&] {
        const fock::StateVector psi = fock::graph_state(g, fock::RegisterKind::EdgeSpace, limits);
        std::string out;
        for (fock::BasisIndex i = 0; i < psi.dimension(); ++i)
            if (psi.amplitude(i) != 0)
                out += (out.empty() ? "" : " + ") + std::string("|") + psi.occupation_string(i) + ">";
        return out;
    });
    add("<N_12>", "1", [&] {
        const fock::StateVector psi = fock::graph_state(g, fock::RegisterKind::EdgeSpace, limits);
        return to_decimal(fock::expectation({{{fock::LadderKind::Number, psi.reg().pair_slot(1_v, 2_v).value()}}}, psi));
    });
    add("<N_14>", "0", [&] {
        const fock::StateVector psi = fock::graph_state(g, fock::RegisterKind::EdgeSpace, limits);
        return to_decimal(fock::expectation({{{fock::LadderKind::Number, psi.reg().pair_slot(1_v, 4_v).value()}}}, psi));
    });
    add("<:N^3_12:> term by term", "0 + 0 + 0 + 1 = 1", [&] {
        const fock::StateVector psi = fock::graph_state(g, fock::RegisterKind::EdgeSpace, limits);
        std::vector<std::pair<std::string, Count>> terms;
        for (const auto& t : fock::expand_walk_terms(g, 3, 1_v, 2_v, fock::MatrixKind::NEdge, limits))
            terms.emplace_back(edge_monomial(t.term, g.slots()),
                               fock::expectation(fock::normal_order(t.term), psi));
        std::sort(terms.begin(), terms.end());
        Count total = 0;
        std::string out;
        for (const auto& [monomial, value] : terms) {
            out += (out.empty() ? "" : " + ") + to_decimal(value);
            total += value;
        }
        const Count engine =
            fock::normal_ordered_expectation(g, 3, 1_v, 2_v, fock::MatrixKind::NEdge, {}, limits);
        if (engine != total)
            out += " (engine " + to_decimal(engine) + ")";
        return out + " = " + to_decimal(total);
    });
    add("t(C4,3;1,2) and p(C4,3;1,2)", "t=1 p=1", [&] {
        return "t=" + to_decimal(oracle::count(g, 3, 1_v, 2_v, oracle::WalkClass::Trail, limits)) +
               " p=" + to_decimal(oracle::count(g, 3, 1_v, 2_v, oracle::WalkClass::Path, limits));
    });

    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const ExampleReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const ExampleCheck& c : r.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
    return {{"checks", std::move(checks)},
            {"reproduced", r.reproduced()},
            {"total", r.checks.size()},
            {"passed", r.passed()},
            {"wall_ms", format_ms(r.wall_ms)}};
}

std::string to_text(const ExampleReport& r)
{
    std::ostringstream out;
    for (const ExampleCheck& c : r.checks) {
        out << (c.ok ? "ok       " : "MISMATCH ") << c.name << ": " << c.actual;
        if (!c.ok)
            out << " (expected " << c.expected << ")";
        out << '\n';
    }
    out << r.reproduced() << '/' << r.checks.size() << " paper values reproduced\n";
    return out.str();
}

Graph bench_graph(const std::string& family, std::size_t n)
{
    if (family == "cycle")
        return graphs::cycle(n);
    if (family == "complete")
        return graphs::complete(n);
    if (family == "path")
        return graphs::path(n);
    if (family == "star")
        return graphs::star(n - 1);
    if (family == "petersen")
        return graphs::petersen();
    throw InputError("unknown graph family '" + family + "'");
}

std::vector<BenchRow> run_bench(const BenchConfig& config)
{
    if (config.n_min > config.n_max)
        throw InputError("empty size range");
    if (config.engines.empty())
        throw InputError("no engines requested");
    std::vector<std::size_t> sizes;
    if (config.family == "petersen")
        sizes.push_back(10);
    else
        for (std::size_t n = std::max<std::size_t>(config.n_min, 2); n <= config.n_max; ++n)
            sizes.push_back(n);

    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        const Graph g = bench_graph(config.family, n);
        const bool closed = config.kind == Kind::Cycles || config.kind == Kind::Hamiltonian;
        Query q;
        q.kind = config.kind;
        q.from = Vertex{0};
        q.to = closed ? Vertex{0} : Vertex{1};
        q.length = config.length != 0 ? config.length : (closed ? n : n - 1);
        q.engines = config.engines;
        q.edge_subspace = config.edge_subspace;
        const std::string family = config.family;

        try {
            const CountReport r = run_count(g, family + std::to_string(n), q, config.limits);
            const std::string agree = r.agreement.empty() ? "-" : (r.all_agree() ? "yes" : "no");
            for (Engine e : config.engines) {
                const EngineResult& res = r.engines.at(std::string(name(e)));
                rows.push_back(BenchRow{family, n, r.kind, r.length, r.from.label(), r.to.label(),
                                        std::string(name(e)), res.value ? to_decimal(*res.value) : "",
                                        res.wall_ms, res.value ? "ok" : "DNF", agree});
            }
        } catch (const InputError&) {
            for (Engine e : config.engines)
                rows.push_back(BenchRow{family, n, config.kind, q.length, q.from.label(), q.to.label(),
                                        std::string(name(e)), "", 0.0, "invalid", "-"});
        }
    }
    return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    out << "family,n,kind,length,from,to,engine,value,wall_ms,status,agree\n";
    for (const BenchRow& r : rows)
        out << r.family << ',' << r.n << ',' << name(r.kind) << ',' << r.length << ',' << r.from << ',' << r.to
            << ',' << r.engine << ',' << r.value << ',' << format_ms(r.wall_ms) << ',' << r.status << ','
            << r.agree << '\n';
    return out.str();
}

} // namespace trailcount::harness
