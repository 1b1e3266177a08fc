// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "trailcount/corpus.hpp"
#include "trailcount/fock.hpp"
#include "trailcount/harness.hpp"
#include "trailcount/nilpotent.hpp"
#include "trailcount/oracle.hpp"
#include "trailcount/report.hpp"
#include "trailcount/verify.hpp"

using namespace trailcount;
using namespace trailcount::literals;
using namespace trailcount::harness;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

std::vector<Criterion> results;

void report(Criterion c, const std::string& summary)
{
    std::printf("%s %d %s: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), summary.c_str());
    for (const std::string& f : c.failures)
        std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    results.push_back(std::move(c));
}

/// Requires the invariant to exist, have run at least once, and have no
/// failures or skipped cases.
void require_clean(Criterion& c, const VerifySummary& s, const std::string& name)
{
    const InvariantResult* r = s.find(name);
    if (!r) {
        c.require(false, name + " did not run");
        return;
    }
    c.require(r->checked > 0, name + " checked no cases");
    c.require(r->failed == 0, name + " failed " + std::to_string(r->failed) + " cases");
    c.require(r->skipped == 0, name + " skipped " + std::to_string(r->skipped) + " cases");
    for (const CaseRecord& x : r->counterexamples)
        c.failures.push_back("  l=" + std::to_string(x.length) + " u=" + std::to_string(x.from) +
                             " v=" + std::to_string(x.to) + " " + x.detail);
}

std::size_t checked(const VerifySummary& s, const std::string& name)
{
    const InvariantResult* r = s.find(name);
    return r ? r->checked : 0;
}

Count engine_value(const CountReport& r, const char* engine)
{
    const EngineResult& e = r.engines.at(engine);
    return e.value ? *e.value : Count(-1);
}

void criterion_worked_example()
{
    Criterion c{1, "worked example"};
    const auto start = Clock::now();
    const ExampleReport r = run_worked_example();
    const double secs = seconds_since(start);
    c.require(r.checks.size() == 8, "expected 8 checks");
    for (const ExampleCheck& check : r.checks)
        c.require(check.ok, check.name + ": got " + check.actual + ", expected " + check.expected);
    c.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu/%zu values reproduced in %.1f ms", r.reproduced(), r.checks.size(),
                  secs * 1000);
    report(std::move(c), buf);
}

void criterion_trail_equivalence(const VerifySummary& s, double secs)
{
    Criterion c{2, "trail count equivalence, connected graphs n<=6, l<=6"};
    for (const char* name : {"trails-symbolic-equals-oracle", "trails-fock-equals-oracle",
                             "trails-fock-equals-symbolic", "dmatrix-equals-trails-when-multiplicity-one"})
        require_clean(c, s, name);
    c.require(secs < 600.0, "sweep took " + std::to_string(secs) + " s");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu graphs, %zu cases, %zu D-form cases with all t_S<=1, %.1f s", s.graphs,
                  checked(s, "trails-fock-equals-oracle"), checked(s, "dmatrix-equals-trails-when-multiplicity-one"),
                  secs);
    report(std::move(c), buf);
}

void criterion_vertex_observable(const VerifySummary& s)
{
    Criterion c{3, "vertex observable characterization"};
    for (const char* name : {"literal-m-equals-distinct-non-initial", "literal-m-fock-equals-distinct-non-initial",
                             "guarded-m-equals-paths", "guarded-m-fock-equals-paths"})
        require_clean(c, s, name);
    const InvariantResult* lit = s.find("literal-m-equals-distinct-non-initial");
    const std::size_t flagged = lit ? lit->flagged : 0;
    c.require(flagged > 0, "no literal overcount found in the sweep");

    const CountReport r = run_count(graphs::example_c4(), "c4", Query{Kind::Paths, 3, 1_v, 2_v});
    c.require(engine_value(r, "symbolic") == 2, "C4 literal symbolic != 2");
    c.require(engine_value(r, "fock") == 2, "C4 literal fock != 2");
    c.require(engine_value(r, "oracle") == 1, "C4 path count != 1");
    c.require(r.has_note(codes::prop2_literal_overcount), "C4 (3, 1->2) not flagged PROP2_LITERAL_OVERCOUNT");

    report(std::move(c), std::to_string(checked(s, "literal-m-equals-distinct-non-initial")) +
                             " literal cases exact, " + std::to_string(flagged) +
                             " flagged PROP2_LITERAL_OVERCOUNT; C4 (3, 1->2) literal 2 vs path 1 flagged");
}

void criterion_dmatrix(const VerifySummary& s)
{
    Criterion c{4, "D-matrix form equals sum of squared edge-set multiplicities"};
    require_clean(c, s, "dmatrix-equals-sum-ts-squared");
    const InvariantResult* d = s.find("dmatrix-equals-sum-ts-squared");
    const std::size_t flagged = d ? d->flagged : 0;
    c.require(flagged > 0, "no DMATRIX_SQUARED case in the sweep");

    const CountReport r = run_count(graphs::bowtie(), "bowtie", Query{Kind::Trails, 6, 3_v, 3_v});
    c.require(engine_value(r, "oracle") == 8, "bowtie closed trails != 8");
    c.require(r.aux.count("fock_dmatrix") && r.aux.at("fock_dmatrix") == "64", "bowtie D form != 64");
    c.require(r.has_note(codes::dmatrix_squared), "bowtie not flagged DMATRIX_SQUARED");

    report(std::move(c), std::to_string(checked(s, "dmatrix-equals-sum-ts-squared")) + " cases exact, " +
                             std::to_string(flagged) + " flagged DMATRIX_SQUARED; bowtie 64 vs 8 flagged");
}

void criterion_hamiltonian()
{
    Criterion c{5, "F amplitude counts directed Hamiltonian cycles"};
    VerifyConfig config;
    config.n_max = 8;
    config.l_max = 1;
    config.engines = {Engine::Oracle, Engine::Fock};
    config.only = {"fmatrix-"};
    const auto start = Clock::now();
    const VerifySummary s = run_verify(config);
    const double sweep_secs = seconds_since(start);
    require_clean(c, s, "fmatrix-equals-directed-hamiltonian");
    require_clean(c, s, "fmatrix-zero-below-n");

    c.require(fock::f_matrix_amplitude(graphs::example_c4(), 4, 1_v) == 2, "C4 != 2");
    c.require(fock::f_matrix_amplitude(graphs::complete(4), 4, 1_v) == 6, "K4 != 6");
    const auto petersen_start = Clock::now();
    const Count petersen = fock::f_matrix_amplitude(graphs::petersen(), 10, 1_v);
    const bool petersen_ham = fock::is_hamiltonian(graphs::petersen());
    const double petersen_secs = seconds_since(petersen_start);
    c.require(petersen == 0, "Petersen != 0");
    c.require(!petersen_ham, "Petersen reported Hamiltonian");
    c.require(petersen_secs < 60.0, "Petersen took " + std::to_string(petersen_secs) + " s");
    c.require(oracle::count_hamiltonian_cycles_through(graphs::petersen(), 1_v, true) == 0, "oracle Petersen != 0");

    c.require(fock::is_hamiltonian(graphs::complete(4)), "K4 not Hamiltonian");
    for (std::size_t n = 3; n <= 12; ++n)
        c.require(fock::is_hamiltonian(graphs::cycle(n)), "C" + std::to_string(n) + " not Hamiltonian");
    std::vector<Graph> trees{graphs::path(3), graphs::path(6), graphs::star(3), graphs::star(6)};
    for (const auto& named : corpus::named_graphs())
        if (named.name == "tree7")
            trees.push_back(named.graph);
    for (const Graph& t : trees)
        c.require(!fock::is_hamiltonian(t), "tree reported Hamiltonian");

    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu graphs n<=8, %zu start vertices exact in %.1f s; Petersen 0 in %.2f s",
                  s.graphs, checked(s, "fmatrix-equals-directed-hamiltonian"), sweep_secs, petersen_secs);
    report(std::move(c), buf);
}

void criterion_euler(const VerifySummary& s)
{
    Criterion c{6, "closed Euler trails"};
    const Count c4 = nilpotent::euler_trail_count_symbolic(graphs::example_c4(), 1_v, 1_v);
    c.require(c4 == 2, "C4 symbolic != 2");
    c.require(oracle::count_closed_euler_trails(graphs::example_c4(), 1_v) == 2, "C4 oracle != 2");
    require_clean(c, s, "euler-symbolic-equals-oracle");
    report(std::move(c), "C4 at vertex 1: 2; " + std::to_string(checked(s, "euler-symbolic-equals-oracle")) +
                             " (Eulerian graph, vertex) pairs exact");
}

void criterion_properties()
{
    Criterion c{7, "randomized algebraic properties"};
    std::mt19937_64 rng(20261016);
    auto pick = [&](std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); };
    std::size_t runs = 0;
    std::size_t failures = 0;
    auto record = [&](bool ok, const std::string& what) {
        ++runs;
        if (!ok) {
            ++failures;
            c.require(false, what);
        }
    };

    for (int i = 0; i < 1000; ++i) {
        switch (i % 4) {
        case 0: {
            const Graph g = corpus::random_graphs(1, pick(1, 8), 0.5, rng()).front();
            const auto reg = fock::Register::vertex_space(g);
            fock::StateVector s(reg);
            for (fock::BasisIndex b = 0; b < s.dimension(); ++b)
                s.set(b, static_cast<fock::Amplitude>(rng() % 11) - 5);
            const std::size_t slot = rng() % reg.width();
            using fock::LadderKind;
            auto sum = fock::apply_term({{{LadderKind::Annihilate, slot}, {LadderKind::Create, slot}}}, s);
            const auto other = fock::apply_term({{{LadderKind::Create, slot}, {LadderKind::Annihilate, slot}}}, s);
            for (fock::BasisIndex b = 0; b < s.dimension(); ++b)
                sum.add(b, other.amplitude(b));
            record(sum == s, "anticommutation failed on slot " + std::to_string(slot));
            break;
        }
        case 1: {
            const std::size_t gen = rng() % nilpotent::Monomial::capacity;
            const auto x = nilpotent::Polynomial::generator(gen);
            bool ok = (x * x).is_zero();
            const Graph g = corpus::random_graphs(1, pick(2, 6), 0.6, rng()).front();
            const auto reg = fock::Register::vertex_space(g);
            fock::StateVector s(reg);
            for (fock::BasisIndex b = 0; b < s.dimension(); ++b)
                s.set(b, static_cast<fock::Amplitude>(rng() % 7) - 3);
            const std::size_t slot = rng() % reg.width();
            using fock::LadderKind;
            ok = ok && fock::apply_term({{{LadderKind::Annihilate, slot}, {LadderKind::Annihilate, slot}}}, s).is_zero();
            ok = ok && fock::apply_term({{{LadderKind::Create, slot}, {LadderKind::Create, slot}}}, s).is_zero();
            ok = ok && fock::apply_term(fock::normal_order({{{LadderKind::Number, slot}, {LadderKind::Number, slot}}}),
                                        s)
                           .is_zero();
            record(ok, "nilpotency failed for generator " + std::to_string(gen) + " / slot " + std::to_string(slot));
            break;
        }
        case 2: {
            const Graph g = corpus::random_graphs(1, pick(2, 7), 0.5, rng()).front();
            const std::size_t l = pick(1, 6);
            const Vertex u{rng() % g.vertex_count()};
            const Vertex v{rng() % g.vertex_count()};
            const Count p = oracle::count(g, l, u, v, oracle::WalkClass::Path);
            const Count t = oracle::count(g, l, u, v, oracle::WalkClass::Trail);
            const Count w = walk_count(g, l, u, v);
            const Count ts = nilpotent::trail_count_symbolic(g, l, u, v);
            record(p <= t && t <= w && ts == t, "p<=t<=w failed: " + format_edge_list(g));
            break;
        }
        case 3: {
            const Graph g = corpus::random_graphs(1, pick(1, 9), 0.5, rng()).front();
            const std::size_t l = pick(0, 12);
            const Vertex u{rng() % g.vertex_count()};
            const Vertex v{rng() % g.vertex_count()};
            record(walk_count(g, l, u, v) == walk_count(g, l, v, u), "walk symmetry failed: " + format_edge_list(g));
            break;
        }
        }
    }
    c.require(runs == 1000, "ran " + std::to_string(runs) + " checks");
    report(std::move(c), std::to_string(runs) + " checks, " + std::to_string(failures) + " failures");
}

} // namespace

int main()
{
    criterion_worked_example();

    VerifyConfig sweep;
    sweep.n_max = 6;
    sweep.l_max = 6;
    const auto start = Clock::now();
    const VerifySummary s = run_verify(sweep);
    const double secs = seconds_since(start);

    criterion_trail_equivalence(s, secs);
    criterion_vertex_observable(s);
    criterion_dmatrix(s);
    criterion_hamiltonian();
    criterion_euler(s);
    criterion_properties();

    std::size_t passed = 0;
    for (const Criterion& c : results)
        passed += c.pass;
    std::printf("%zu/%zu acceptance criteria pass\n", passed, results.size());
    return passed == results.size() ? 0 : 1;
}
