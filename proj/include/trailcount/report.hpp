#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trailcount/common.hpp"
#include "trailcount/graph.hpp"
#include "trailcount/nilpotent.hpp"

namespace trailcount::harness {

enum class Kind { Walks, Trails, Paths, Euler, Cycles, Hamiltonian };
enum class Engine { Oracle, Symbolic, Fock };

std::string_view name(Kind k);
std::string_view name(Engine e);
/// Throws InputError on an unknown name.
Kind parse_kind(std::string_view text);
Engine parse_engine(std::string_view text);

inline constexpr Engine all_engines[] = {Engine::Oracle, Engine::Symbolic, Engine::Fock};

/// Discrepancy codes. Stable: downstream tooling matches on them.
namespace codes {
inline constexpr std::string_view prop2_literal_overcount = "PROP2_LITERAL_OVERCOUNT";
inline constexpr std::string_view dmatrix_squared = "DMATRIX_SQUARED";
inline constexpr std::string_view guarded_variant = "GUARDED_VARIANT_CORRECTION";
inline constexpr std::string_view engine_disagreement = "ENGINE_DISAGREEMENT";
} // namespace codes

struct Query {
    Kind kind = Kind::Trails;
    /// Ignored for euler (|E|) and hamiltonian (n).
    std::size_t length = 1;
    Vertex from{};
    /// Ignored for cycles and hamiltonian (closed at `from`).
    Vertex to{};
    nilpotent::MVariant variant = nilpotent::MVariant::Literal;
    /// Trails and euler: evaluate the fock engine on one qubit per edge.
    bool edge_subspace = false;
    std::vector<Engine> engines{std::begin(all_engines), std::end(all_engines)};
};

struct EngineResult {
    std::optional<Count> value;
    /// "capacity", "budget" or "input" when value is empty.
    std::string error_kind;
    std::string error;
    double wall_ms = 0.0;

    friend bool operator==(const EngineResult&, const EngineResult&) = default;
};

struct Note {
    std::string code;
    std::string detail;

    friend bool operator==(const Note&, const Note&) = default;
};

struct CountReport {
    std::string graph_id;
    Kind kind = Kind::Trails;
    std::size_t length = 0;
    Vertex from{};
    Vertex to{};
    /// "literal" or "guarded" for paths, empty otherwise.
    std::string variant;
    std::map<std::string, EngineResult> engines;
    /// "a:b" -> values equal, for every pair of engines that produced a value.
    std::map<std::string, bool> agreement;
    /// Auxiliary exact values (decimal strings), e.g. the D-matrix form.
    std::map<std::string, std::string> aux;
    std::vector<Note> notes;

    bool has_note(std::string_view code) const;
    /// True when some engine failed on a capacity or budget cap.
    bool capacity_exhausted() const;
    bool all_agree() const;

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Runs the requested engines on one query. Engine failures on caps are
/// recorded in the report; malformed queries throw InputError.
CountReport run_count(const Graph& g, std::string graph_id, const Query& query, const Limits& limits = {});

/// Stable identifier for an input file: "fnv1a:<16 hex digits>" of its bytes.
std::string content_id(std::string_view bytes);

/// Canonical JSON: sorted keys, counts and times as decimal strings, so that
/// parse + dump reproduces the bytes.
nlohmann::json to_json(const CountReport& r);
CountReport report_from_json(const nlohmann::json& j);
/// Header plus one row per engine.
std::string to_csv(const CountReport& r);
std::string to_text(const CountReport& r);

} // namespace trailcount::harness
