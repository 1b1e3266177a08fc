#include "trailcount/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "trailcount/corpus.hpp"
#include "trailcount/fock.hpp"
#include "trailcount/nilpotent.hpp"
#include "trailcount/oracle.hpp"

namespace trailcount::harness {

using oracle::WalkClass;

void validate(const VerifyConfig& c)
{
    if (c.n_max == 0)
        throw InputError("n_max must be at least 1");
    if (c.l_max == 0)
        throw InputError("l_max must be at least 1");
    if (c.source == GraphSource::AllConnected && c.n_max > 9)
        throw InputError("connected-graph corpus supports n_max <= 9");
    if (c.source == GraphSource::Random) {
        if (c.random_n == 0 || c.random_n > 23)
            throw InputError("random graph size must be in 1..23");
        if (!(c.edge_probability >= 0.0 && c.edge_probability <= 1.0))
            throw InputError("edge probability must be in [0, 1]");
    }
    const std::size_t n = c.source == GraphSource::Random ? std::max(c.n_max, c.random_n) : c.n_max;
    if (std::find(c.engines.begin(), c.engines.end(), Engine::Fock) != c.engines.end() && n > c.limits.max_qubits)
        throw InputError("n_max " + std::to_string(n) + " exceeds the " + std::to_string(c.limits.max_qubits) +
                         "-qubit register cap");
    if (c.engines.empty())
        throw InputError("no engines requested");
}

bool VerifySummary::passed() const
{
    return std::all_of(invariants.begin(), invariants.end(), [](const InvariantResult& r) { return r.passed(); });
}

const InvariantResult* VerifySummary::find(const std::string& name) const
{
    for (const InvariantResult& r : invariants)
        if (r.name == name)
            return &r;
    return nullptr;
}

std::vector<Graph> verify_corpus(const VerifyConfig& c)
{
    std::vector<Graph> out;
    if (c.source == GraphSource::AllConnected)
        out = corpus::connected_graphs_up_to(c.n_max);
    else if (c.source == GraphSource::Random)
        out = corpus::random_graphs(c.random_count, c.random_n, c.edge_probability, c.seed);
    if (c.include_named)
        for (auto& named : corpus::named_graphs())
            out.push_back(std::move(named.graph));
    return out;
}

namespace {

/// A value computed on first use. Cap failures are remembered, not rethrown.
class Lazy {
public:
    explicit Lazy(std::function<Count()> f) : f_(std::move(f)) {}

    const Count* get()
    {
        if (!done_) {
            done_ = true;
            try {
                value_ = f_();
            } catch (const CapacityError& e) {
                error_ = e.what();
            } catch (const BudgetExceeded& e) {
                error_ = e.what();
            }
        }
        return value_ ? &*value_ : nullptr;
    }
    const std::string& error() const { return error_; }

private:
    std::function<Count()> f_;
    bool done_ = false;
    std::optional<Count> value_;
    std::string error_;
};

struct InvariantDef {
    const char* module;
    const char* name;
    std::vector<Engine> needs;
    const char* flag_code = "";
};

const std::vector<InvariantDef>& invariant_defs()
{
    static const std::vector<InvariantDef> defs{
        {"graph-core", "walk-symmetry", {Engine::Symbolic}},
        {"graph-core", "walk-length-one-is-adjacency", {Engine::Symbolic}},
        {"graph-core", "walk-count-equals-oracle", {Engine::Symbolic, Engine::Oracle}},
        {"enumeration-oracle", "path-trail-walk-monotone", {Engine::Oracle}},
        {"enumeration-oracle", "reversal-symmetry", {Engine::Oracle}},
        {"enumeration-oracle", "path-length-bound", {Engine::Oracle}},
        {"enumeration-oracle", "histogram-sums-to-trails", {Engine::Oracle}},
        {"enumeration-oracle", "enumerate-well-formed", {Engine::Oracle}},
        {"nilpotent-engine", "nilpotency", {Engine::Symbolic}},
        {"nilpotent-engine", "degree-and-coefficients", {Engine::Symbolic}},
        {"nilpotent-engine", "trails-symbolic-equals-oracle", {Engine::Symbolic, Engine::Oracle}},
        {"nilpotent-engine", "literal-m-equals-distinct-non-initial", {Engine::Symbolic, Engine::Oracle},
         "PROP2_LITERAL_OVERCOUNT"},
        {"nilpotent-engine", "guarded-m-equals-paths", {Engine::Symbolic, Engine::Oracle}},
        {"nilpotent-engine", "trails-at-most-walks", {Engine::Symbolic}},
        {"nilpotent-engine", "euler-symbolic-equals-oracle", {Engine::Symbolic, Engine::Oracle}},
        {"fock-engine", "anticommutation", {Engine::Fock}},
        {"fock-engine", "basis-state-adjacency", {Engine::Fock}},
        {"fock-engine", "expectations-nonnegative", {Engine::Fock}},
        {"fock-engine", "trails-fock-equals-oracle", {Engine::Fock, Engine::Oracle}},
        {"fock-engine", "trails-fock-equals-symbolic", {Engine::Fock, Engine::Symbolic}},
        {"fock-engine", "literal-m-fock-equals-distinct-non-initial", {Engine::Fock, Engine::Oracle},
         "PROP2_LITERAL_OVERCOUNT"},
        {"fock-engine", "guarded-m-fock-equals-paths", {Engine::Fock, Engine::Oracle}},
        {"fock-engine", "dmatrix-equals-sum-ts-squared", {Engine::Fock, Engine::Oracle}, "DMATRIX_SQUARED"},
        {"fock-engine", "dmatrix-equals-trails-when-multiplicity-one", {Engine::Fock, Engine::Oracle}},
        {"fock-engine", "plain-expectation-equals-walks", {Engine::Fock, Engine::Symbolic}},
        {"fock-engine", "fmatrix-zero-below-n", {Engine::Fock}},
        {"fock-engine", "fmatrix-equals-directed-hamiltonian", {Engine::Fock, Engine::Oracle}},
    };
    return defs;
}

class Sweep {
public:
    Sweep(const VerifyConfig& config, VerifySummary& summary) : config_(config), summary_(summary)
    {
        for (const InvariantDef& s : invariant_defs()) {
            if (!selected(s.name))
                continue;
            const bool runnable = std::all_of(s.needs.begin(), s.needs.end(), [&](Engine e) {
                return std::find(config.engines.begin(), config.engines.end(), e) != config.engines.end();
            });
            if (!runnable) {
                summary_.warnings.push_back(std::string(s.name) + " not run: needs an engine that is not enabled");
                continue;
            }
            InvariantResult r;
            r.module = s.module;
            r.name = s.name;
            r.flag_code = s.flag_code;
            index_[s.name] = summary_.invariants.size();
            summary_.invariants.push_back(std::move(r));
        }
    }

    /// nullptr when the invariant is not part of this run.
    InvariantResult* inv(const char* name)
    {
        const auto it = index_.find(name);
        return it == index_.end() ? nullptr : &summary_.invariants[it->second];
    }

    void set_case(const Graph& g, const std::string& text, std::size_t l, Vertex u, Vertex v)
    {
        graph_ = &g;
        text_ = &text;
        l_ = l;
        u_ = u;
        v_ = v;
    }

    /// Checks `ok(values...)` when every value is available; otherwise counts
    /// a skip and records the cap message.
    template <typename Pred>
    void check(const char* name, std::initializer_list<Lazy*> inputs, Pred ok, const std::string& detail = {})
    {
        InvariantResult* r = inv(name);
        if (!r)
            return;
        std::vector<const Count*> values;
        for (Lazy* in : inputs) {
            const Count* value = in->get();
            if (!value) {
                ++r->skipped;
                capacity(in->error());
                return;
            }
            values.push_back(value);
        }
        ++r->checked;
        if (!ok(values))
            fail(*r, describe(values, detail));
    }

    void check_bool(const char* name, bool ok, const std::string& detail)
    {
        if (InvariantResult* r = inv(name)) {
            ++r->checked;
            if (!ok)
                fail(*r, detail);
        }
    }

    void skip(const char* name, const std::string& message)
    {
        if (InvariantResult* r = inv(name)) {
            ++r->skipped;
            capacity(message);
        }
    }

    void flag(const char* name, const std::string& detail)
    {
        if (InvariantResult* r = inv(name)) {
            ++r->flagged;
            if (r->flagged_cases.size() < max_stored_cases)
                r->flagged_cases.push_back(record(detail));
        }
    }

    std::size_t l() const { return l_; }

private:
    bool selected(const std::string& name) const
    {
        if (config_.only.empty())
            return true;
        return std::any_of(config_.only.begin(), config_.only.end(),
                           [&](const std::string& prefix) { return name.rfind(prefix, 0) == 0; });
    }

    static std::string describe(const std::vector<const Count*>& values, const std::string& detail)
    {
        std::string out = detail.empty() ? "values" : detail;
        out += ":";
        for (const Count* v : values)
            out += " " + to_decimal(*v);
        return out;
    }

    CaseRecord record(const std::string& detail) const
    {
        return CaseRecord{*text_, l_, u_.label(), v_.label(), detail};
    }

    void fail(InvariantResult& r, const std::string& detail)
    {
        ++r.failed;
        if (r.counterexamples.size() < max_stored_cases)
            r.counterexamples.push_back(record(detail));
    }

    void capacity(const std::string& message)
    {
        ++summary_.capacity_error_count;
        std::ostringstream out;
        out << "n=" << graph_->vertex_count() << " |E|=" << graph_->edge_count() << " l=" << l_
            << " u=" << u_.label() << " v=" << v_.label() << ": " << message;
        auto& stored = summary_.capacity_errors;
        if (stored.size() < max_stored_cases && (stored.empty() || stored.back() != out.str()))
            stored.push_back(out.str());
    }

    const VerifyConfig& config_;
    VerifySummary& summary_;
    std::map<std::string, std::size_t, std::less<>> index_;
    const Graph* graph_ = nullptr;
    const std::string* text_ = nullptr;
    std::size_t l_ = 0;
    Vertex u_{};
    Vertex v_{};
};

bool eq(const std::vector<const Count*>& v) { return *v[0] == *v[1]; }

template <typename F>
bool attempt(Sweep& sweep, const char* name, F f)
{
    try {
        f();
        return true;
    } catch (const CapacityError& e) {
        sweep.skip(name, e.what());
    } catch (const BudgetExceeded& e) {
        sweep.skip(name, e.what());
    }
    return false;
}

void run_graph(Sweep& sweep, const Graph& g, const VerifyConfig& config, std::mt19937_64& rng)
{
    const std::size_t n = g.vertex_count();
    const Limits& limits = config.limits;
    const std::string text = format_edge_list(g);
    const Vertex first{0};
    sweep.set_case(g, text, 0, first, first);

    if (sweep.inv("nilpotency")) {
        for (std::size_t s = 0; s < g.slots().size(); ++s) {
            const auto x = nilpotent::Polynomial::generator(s);
            sweep.check_bool("nilpotency", (x * x).is_zero(), "generator " + std::to_string(s) + " squares to nonzero");
        }
    }

    if (sweep.inv("degree-and-coefficients")) {
        attempt(sweep, "degree-and-coefficients", [&] {
            const nilpotent::PolyMatrix a = nilpotent::formal_adjacency_edges(g);
            nilpotent::PolyMatrix p = a;
            for (std::size_t l = 1; l <= config.l_max; ++l) {
                sweep.set_case(g, text, l, first, first);
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i)
                    for (std::size_t j = 0; j < n && ok; ++j)
                        for (const auto& [m, c] : p(i, j).terms())
                            if (m.degree() != l || c < 1) {
                                ok = false;
                                break;
                            }
                sweep.check_bool("degree-and-coefficients", ok, "monomial of wrong degree or coefficient < 1");
                if (l < config.l_max)
                    p = nilpotent::multiply(p, a, limits);
            }
        });
        sweep.set_case(g, text, 0, first, first);
    }

    if (sweep.inv("anticommutation")) {
        attempt(sweep, "anticommutation", [&] {
            const auto reg = fock::Register::vertex_space(g, limits);
            std::uniform_int_distribution<int> amp(-4, 4);
            fock::StateVector s(reg);
            for (fock::BasisIndex i = 0; i < s.dimension(); ++i)
                s.set(i, amp(rng));
            for (std::size_t slot = 0; slot < reg.width(); ++slot) {
                using fock::LadderKind;
                const auto aad = fock::apply_term(fock::OperatorTerm{{{LadderKind::Annihilate, slot},
                                                                      {LadderKind::Create, slot}}},
                                                  s);
                auto sum = fock::apply_term(fock::OperatorTerm{{{LadderKind::Create, slot},
                                                                {LadderKind::Annihilate, slot}}},
                                            s);
                for (fock::BasisIndex i = 0; i < s.dimension(); ++i)
                    sum.add(i, aad.amplitude(i));
                sweep.check_bool("anticommutation", sum == s, "slot " + std::to_string(slot));
            }
        });
    }

    if (sweep.inv("basis-state-adjacency")) {
        attempt(sweep, "basis-state-adjacency", [&] {
            // |psi_G> is one basis ket, so <psi|N|psi> is the amplitude N leaves on it.
            const fock::StateVector psi = fock::graph_state(g, fock::RegisterKind::EdgeSpace, limits);
            fock::BasisIndex occupied = 0;
            while (psi.amplitude(occupied) == 0)
                ++occupied;
            const EdgeSlotIndex slots = g.slots();
            for (std::size_t s = 0; s < slots.size(); ++s) {
                const Edge e = slots.pair(s);
                const auto ket = fock::apply(fock::LadderOp{fock::LadderKind::Number, s}, fock::BasisKet{occupied, 1});
                const Count value = ket && ket->index == occupied ? Count(ket->amplitude) : Count(0);
                sweep.set_case(g, text, 1, e.first, e.second);
                sweep.check_bool("basis-state-adjacency", value == (g.adjacent(e.first, e.second) ? 1 : 0),
                                 "<N> = " + to_decimal(value));
            }
        });
        sweep.set_case(g, text, 0, first, first);
    }

    bool eulerian = true;
    for (std::size_t v = 0; v < n; ++v)
        eulerian = eulerian && g.degree(Vertex{v}) % 2 == 0;
    if (eulerian && sweep.inv("euler-symbolic-equals-oracle"))
        for (std::size_t u = 0; u < n; ++u) {
            const Vertex vu{u};
            sweep.set_case(g, text, g.edge_count(), vu, vu);
            Lazy sym([&] { return nilpotent::euler_trail_count_symbolic(g, vu, vu, limits); });
            Lazy orc([&] { return oracle::count_closed_euler_trails(g, vu, limits); });
            sweep.check("euler-symbolic-equals-oracle", {&sym, &orc}, eq, "symbolic, oracle");
        }

    if (n >= 3 && (sweep.inv("fmatrix-zero-below-n") || sweep.inv("fmatrix-equals-directed-hamiltonian")))
        for (std::size_t u = 0; u < n; ++u) {
            const Vertex vu{u};
            for (std::size_t l = 1; l < n && sweep.inv("fmatrix-zero-below-n"); ++l) {
                sweep.set_case(g, text, l, vu, vu);
                Lazy f([&] { return fock::f_matrix_amplitude(g, l, vu, limits); });
                sweep.check("fmatrix-zero-below-n", {&f}, [](const auto& v) { return *v[0] == 0; }, "amplitude");
            }
            sweep.set_case(g, text, n, vu, vu);
            Lazy f([&] { return fock::f_matrix_amplitude(g, n, vu, limits); });
            Lazy ham([&] { return oracle::count_hamiltonian_cycles_through(g, vu, true, limits); });
            sweep.check("fmatrix-equals-directed-hamiltonian", {&f, &ham}, eq, "amplitude, directed cycles");
        }
}

void run_case(Sweep& sweep, const Graph& g, const std::string& text, std::size_t l, Vertex u, Vertex v,
              const Limits& limits)
{
    const std::size_t n = g.vertex_count();
    sweep.set_case(g, text, l, u, v);

    Lazy walks([&] { return walk_count(g, l, u, v); });
    Lazy walks_rev([&] { return walk_count(g, l, v, u); });
    Lazy o_walk([&] { return oracle::count(g, l, u, v, WalkClass::Walk, limits); });
    Lazy o_trail([&] { return oracle::count(g, l, u, v, WalkClass::Trail, limits); });
    Lazy o_path([&] { return oracle::count(g, l, u, v, WalkClass::Path, limits); });
    Lazy o_dni([&] { return oracle::count(g, l, u, v, WalkClass::DistinctNonInitial, limits); });
    Lazy o_walk_rev([&] { return oracle::count(g, l, v, u, WalkClass::Walk, limits); });
    Lazy o_trail_rev([&] { return oracle::count(g, l, v, u, WalkClass::Trail, limits); });
    Lazy o_path_rev([&] { return oracle::count(g, l, v, u, WalkClass::Path, limits); });
    std::optional<std::map<oracle::EdgeSet, Count>> histogram;
    std::string histogram_error;
    auto get_histogram = [&]() -> const std::map<oracle::EdgeSet, Count>* {
        if (!histogram && histogram_error.empty()) {
            try {
                histogram = oracle::trail_edge_set_histogram(g, l, u, v, limits);
            } catch (const BudgetExceeded& e) {
                histogram_error = e.what();
            }
        }
        return histogram ? &*histogram : nullptr;
    };
    Lazy hist_sum([&] {
        const auto* h = get_histogram();
        if (!h)
            throw BudgetExceeded(histogram_error);
        Count total = 0;
        for (const auto& [set, t] : *h)
            total += t;
        return total;
    });
    Lazy hist_sq([&] {
        const auto* h = get_histogram();
        if (!h)
            throw BudgetExceeded(histogram_error);
        Count total = 0;
        for (const auto& [set, t] : *h)
            total += t * t;
        return total;
    });
    Lazy hist_max([&] {
        const auto* h = get_histogram();
        if (!h)
            throw BudgetExceeded(histogram_error);
        Count top = 0;
        for (const auto& [set, t] : *h)
            top = std::max(top, t);
        return top;
    });
    Lazy s_trail([&] { return nilpotent::trail_count_symbolic(g, l, u, v, limits); });
    Lazy s_literal([&] { return nilpotent::path_count_symbolic(g, l, u, v, nilpotent::MVariant::Literal, limits); });
    Lazy s_guarded(
        [&] { return nilpotent::path_count_symbolic(g, l, u, v, nilpotent::MVariant::StartGuarded, limits); });
    Lazy f_trail([&] {
        return fock::normal_ordered_expectation(g, l, u, v, fock::MatrixKind::NEdge, {}, limits);
    });
    Lazy f_literal([&] {
        return fock::normal_ordered_expectation(g, l, u, v, fock::MatrixKind::MVertex, {}, limits);
    });
    Lazy f_guarded([&] {
        fock::ObservableOptions opts;
        opts.start_guarded = true;
        return fock::normal_ordered_expectation(g, l, u, v, fock::MatrixKind::MVertex, opts, limits);
    });
    Lazy f_dform([&] { return fock::d_matrix_quadratic_form(g, l, u, v, limits); });
    Lazy f_plain([&] { return fock::plain_expectation(g, l, u, v, limits); });

    sweep.check("walk-symmetry", {&walks, &walks_rev}, eq, "w(u,v), w(v,u)");
    if (l == 1)
        sweep.check("walk-length-one-is-adjacency", {&walks},
                    [&](const auto& x) { return *x[0] == (g.adjacent(u, v) ? 1 : 0); }, "w");
    sweep.check("walk-count-equals-oracle", {&walks, &o_walk}, eq, "walk_count, oracle");

    sweep.check("path-trail-walk-monotone", {&o_path, &o_trail, &o_walk},
                [](const auto& x) { return *x[0] <= *x[1] && *x[1] <= *x[2]; }, "p, t, w");
    sweep.check("reversal-symmetry", {&o_walk, &o_walk_rev, &o_trail, &o_trail_rev, &o_path, &o_path_rev},
                [](const auto& x) { return *x[0] == *x[1] && *x[2] == *x[3] && *x[4] == *x[5]; },
                "w, w', t, t', p, p'");
    if ((u != v && l > n - 1) || (u == v && l > n))
        sweep.check("path-length-bound", {&o_path}, [](const auto& x) { return *x[0] == 0; }, "p");
    sweep.check("histogram-sums-to-trails", {&hist_sum, &o_trail}, eq, "sum t_S, t");

    if (sweep.inv("enumerate-well-formed")) {
        attempt(sweep, "enumerate-well-formed", [&] {
            for (WalkClass c : {WalkClass::Walk, WalkClass::Trail, WalkClass::Path, WalkClass::DistinctNonInitial,
                                WalkClass::StartOnceTrailEdgeSet}) {
                const auto walks_of_class = oracle::enumerate(g, l, u, v, c, limits);
                bool ok = std::adjacent_find(walks_of_class.begin(), walks_of_class.end(),
                                             [](const auto& a, const auto& b) { return !(a < b); }) ==
                          walks_of_class.end();
                std::set<std::vector<std::size_t>> edge_sets;
                for (const auto& w : walks_of_class) {
                    if (!ok)
                        break;
                    if (w.vertices.front() != u || w.vertices.back() != v || w.length() != l)
                        ok = false;
                    else if (c == WalkClass::StartOnceTrailEdgeSet) {
                        std::vector<std::size_t> s;
                        for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
                            s.push_back(g.slots().slot(w.vertices[i], w.vertices[i + 1]));
                        std::sort(s.begin(), s.end());
                        ok = oracle::satisfies(g, w, WalkClass::Trail) && edge_sets.insert(s).second;
                    } else {
                        ok = oracle::satisfies(g, w, c);
                    }
                }
                sweep.check_bool("enumerate-well-formed", ok, std::string(oracle::name(c)));
            }
        });
    }

    sweep.check("trails-symbolic-equals-oracle", {&s_trail, &o_trail}, eq, "symbolic, oracle");
    if (l >= 1) {
        sweep.check("literal-m-equals-distinct-non-initial", {&s_literal, &o_dni}, eq, "literal, distinct-non-initial");
        if (u != v) {
            sweep.check("guarded-m-equals-paths", {&s_guarded, &o_path}, eq, "guarded, paths");
            if (sweep.inv("literal-m-equals-distinct-non-initial") && s_literal.get() && o_path.get() &&
                *s_literal.get() > *o_path.get())
                sweep.flag("literal-m-equals-distinct-non-initial",
                           "literal " + to_decimal(*s_literal.get()) + " > paths " + to_decimal(*o_path.get()));
        }
    }
    sweep.check("trails-at-most-walks", {&s_trail, &walks}, [](const auto& x) { return *x[0] <= *x[1]; }, "t, w");

    sweep.check("expectations-nonnegative", {&f_trail, &f_literal, &f_plain},
                [](const auto& x) { return *x[0] >= 0 && *x[1] >= 0 && *x[2] >= 0; }, "N, M, plain");
    sweep.check("trails-fock-equals-oracle", {&f_trail, &o_trail}, eq, "fock, oracle");
    sweep.check("trails-fock-equals-symbolic", {&f_trail, &s_trail}, eq, "fock, symbolic");
    if (l >= 1) {
        sweep.check("literal-m-fock-equals-distinct-non-initial", {&f_literal, &o_dni}, eq,
                    "fock literal, distinct-non-initial");
        if (u != v) {
            sweep.check("guarded-m-fock-equals-paths", {&f_guarded, &o_path}, eq, "fock guarded, paths");
            if (sweep.inv("literal-m-fock-equals-distinct-non-initial") && f_literal.get() && o_path.get() &&
                *f_literal.get() > *o_path.get())
                sweep.flag("literal-m-fock-equals-distinct-non-initial",
                           "literal " + to_decimal(*f_literal.get()) + " > paths " + to_decimal(*o_path.get()));
        }
        sweep.check("dmatrix-equals-sum-ts-squared", {&f_dform, &hist_sq}, eq, "D form, sum t_S^2");
        if (sweep.inv("dmatrix-equals-sum-ts-squared") && f_dform.get() && hist_sum.get() &&
            *f_dform.get() != *hist_sum.get())
            sweep.flag("dmatrix-equals-sum-ts-squared",
                       "D form " + to_decimal(*f_dform.get()) + " vs trails " + to_decimal(*hist_sum.get()));
        if (sweep.inv("dmatrix-equals-trails-when-multiplicity-one") && hist_max.get() && *hist_max.get() <= 1)
            sweep.check("dmatrix-equals-trails-when-multiplicity-one", {&f_dform, &o_trail}, eq, "D form, t");
    }
    sweep.check("plain-expectation-equals-walks", {&f_plain, &walks}, eq, "plain, walk_count");
}

} // namespace

VerifySummary run_verify(const VerifyConfig& config)
{
    validate(config);
    return run_verify(verify_corpus(config), config);
}

VerifySummary run_verify(const std::vector<Graph>& corpus, const VerifyConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    VerifySummary summary;
    summary.graphs = corpus.size();
    Sweep sweep(config, summary);
    if (corpus.empty())
        summary.warnings.push_back("empty corpus: every invariant passes vacuously");

    std::mt19937_64 rng(config.seed);
    for (const Graph& g : corpus) {
        run_graph(sweep, g, config, rng);
        const std::string text = format_edge_list(g);
        for (std::size_t l = 1; l <= config.l_max; ++l)
            for (std::size_t u = 0; u < g.vertex_count(); ++u)
                for (std::size_t v = 0; v < g.vertex_count(); ++v)
                    run_case(sweep, g, text, l, Vertex{u}, Vertex{v}, config.limits);
    }
    summary.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

namespace {

nlohmann::json to_json(const CaseRecord& c)
{
    return {{"graph", c.graph}, {"length", c.length}, {"from", c.from}, {"to", c.to}, {"detail", c.detail}};
}

} // namespace

nlohmann::json to_json(const VerifySummary& s)
{
    nlohmann::json invariants = nlohmann::json::array();
    for (const InvariantResult& r : s.invariants) {
        nlohmann::json cx = nlohmann::json::array();
        for (const CaseRecord& c : r.counterexamples)
            cx.push_back(to_json(c));
        nlohmann::json j = {{"module", r.module}, {"name", r.name},       {"passed", r.passed()},
                            {"checked", r.checked}, {"failed", r.failed}, {"skipped", r.skipped},
                            {"counterexamples", std::move(cx)}};
        if (!r.flag_code.empty()) {
            nlohmann::json flagged = nlohmann::json::array();
            for (const CaseRecord& c : r.flagged_cases)
                flagged.push_back(to_json(c));
            j["flag_code"] = r.flag_code;
            j["flagged"] = r.flagged;
            j["flagged_cases"] = std::move(flagged);
        }
        invariants.push_back(std::move(j));
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", s.wall_ms);
    return {{"graphs", s.graphs},
            {"passed", s.passed()},
            {"invariants", std::move(invariants)},
            {"capacity_errors", s.capacity_errors},
            {"capacity_error_count", s.capacity_error_count},
            {"warnings", s.warnings},
            {"wall_ms", ms}};
}

std::string to_text(const VerifySummary& s)
{
    std::ostringstream out;
    out << "verified " << s.graphs << " graphs in " << static_cast<long long>(s.wall_ms) << " ms\n";
    for (const std::string& w : s.warnings)
        out << "warning: " << w << '\n';
    for (const InvariantResult& r : s.invariants) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.module << '/' << r.name << "  checked=" << r.checked
            << " failed=" << r.failed << " skipped=" << r.skipped;
        if (!r.flag_code.empty())
            out << " flagged[" << r.flag_code << "]=" << r.flagged;
        out << '\n';
        for (const CaseRecord& c : r.counterexamples) {
            out << "  counterexample l=" << c.length << " u=" << c.from << " v=" << c.to << ": " << c.detail << '\n';
            std::istringstream lines(c.graph);
            for (std::string line; std::getline(lines, line);)
                out << "    " << line << '\n';
        }
    }
    if (s.capacity_error_count > 0) {
        out << s.capacity_error_count << " cases skipped on engine caps\n";
        for (const std::string& e : s.capacity_errors)
            out << "  " << e << '\n';
    }
    out << (s.passed() ? "all invariants hold\n" : "invariant failures\n");
    return out.str();
}

} // namespace trailcount::harness
