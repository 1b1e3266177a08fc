#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "trailcount/common.hpp"
#include "trailcount/graph.hpp"
#include "trailcount/report.hpp"

namespace trailcount::harness {

enum class GraphSource { AllConnected, Random, None };

struct VerifyConfig {
    std::size_t n_max = 5;
    std::size_t l_max = 5;
    GraphSource source = GraphSource::AllConnected;
    /// Random source: `random_count` samples of G(random_n, edge_probability).
    std::size_t random_count = 20;
    std::size_t random_n = 6;
    double edge_probability = 0.5;
    std::uint64_t seed = 1;
    /// Append the named graphs (C4, K4, bowtie, Petersen, ...).
    bool include_named = false;
    std::vector<Engine> engines{std::begin(all_engines), std::end(all_engines)};
    /// Run only invariants whose name starts with one of these; empty runs all.
    std::vector<std::string> only;
    Limits limits;
};

/// Throws InputError when n_max or l_max is outside what the engines support.
void validate(const VerifyConfig& config);

struct CaseRecord {
    /// Edge-list text of the graph.
    std::string graph;
    std::size_t length = 0;
    std::size_t from = 0;
    std::size_t to = 0;
    std::string detail;
};

struct InvariantResult {
    std::string module;
    std::string name;
    /// Non-empty for characterized discrepancies: the note code attached to
    /// every case where the original claim and the exact count part ways.
    std::string flag_code;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t flagged = 0;
    std::vector<CaseRecord> counterexamples;
    std::vector<CaseRecord> flagged_cases;

    bool passed() const { return failed == 0; }
};

struct VerifySummary {
    std::size_t graphs = 0;
    std::vector<InvariantResult> invariants;
    /// Cases skipped on a capacity or budget cap; not failures.
    std::vector<std::string> capacity_errors;
    std::size_t capacity_error_count = 0;
    std::vector<std::string> warnings;
    double wall_ms = 0.0;

    bool passed() const;
    const InvariantResult* find(const std::string& name) const;
};

/// At most this many counterexamples, flagged cases and capacity messages are
/// stored per list; the counters keep the full totals.
inline constexpr std::size_t max_stored_cases = 25;

std::vector<Graph> verify_corpus(const VerifyConfig& config);
VerifySummary run_verify(const VerifyConfig& config);
VerifySummary run_verify(const std::vector<Graph>& corpus, const VerifyConfig& config);

nlohmann::json to_json(const VerifySummary& s);
std::string to_text(const VerifySummary& s);

} // namespace trailcount::harness
