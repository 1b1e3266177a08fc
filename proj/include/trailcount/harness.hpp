#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "trailcount/common.hpp"
#include "trailcount/graph.hpp"
#include "trailcount/report.hpp"

namespace trailcount::harness {

struct ExampleCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct ExampleReport {
    std::vector<ExampleCheck> checks;
    double wall_ms = 0.0;

    std::size_t reproduced() const;
    bool passed() const { return reproduced() == checks.size(); }
};

/// Recomputes every value of the worked 4-cycle example from `g` and compares
/// each against its hard-coded expected value. Feeding anything other than
/// graphs::example_c4() is a negative control and should fail some checks.
ExampleReport run_worked_example(const Graph& g = graphs::example_c4(), const Limits& limits = {});

nlohmann::json to_json(const ExampleReport& r);
/// One line per check, then "k/8 paper values reproduced".
std::string to_text(const ExampleReport& r);

struct BenchConfig {
    /// cycle, complete, path, star or petersen (size range ignored).
    std::string family = "cycle";
    std::size_t n_min = 3;
    std::size_t n_max = 8;
    Kind kind = Kind::Trails;
    /// 0 picks n - 1 for open kinds and n for cycles.
    std::size_t length = 0;
    std::vector<Engine> engines{std::begin(all_engines), std::end(all_engines)};
    bool edge_subspace = false;
    Limits limits;
};

struct BenchRow {
    std::string family;
    std::size_t n = 0;
    Kind kind = Kind::Trails;
    std::size_t length = 0;
    std::size_t from = 0;
    std::size_t to = 0;
    std::string engine;
    std::string value;
    double wall_ms = 0.0;
    /// "ok", "DNF" (capacity or budget cap) or "invalid" (query does not apply).
    std::string status;
    /// "yes"/"no" when at least two engines produced values, "-" otherwise.
    std::string agree;
};

/// Throws InputError on an unknown family or an empty size range.
Graph bench_graph(const std::string& family, std::size_t n);
std::vector<BenchRow> run_bench(const BenchConfig& config);
/// Header "family,n,kind,length,from,to,engine,value,wall_ms,status,agree".
std::string to_csv(const std::vector<BenchRow>& rows);

} // namespace trailcount::harness
