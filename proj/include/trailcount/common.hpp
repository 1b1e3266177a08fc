#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace trailcount {

/// Exact nonnegative counts. Walk counts grow exponentially in the length,
/// so nothing in the library counts in fixed-width integers.
using Count = boost::multiprecision::cpp_int;

std::string to_decimal(const Count& c);
Count count_from_decimal(const std::string& text);

/// Malformed input: bad edge lists, vertices out of range, violated
/// preconditions on lengths.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A register, monomial store, or amplitude would exceed its configured cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Brute-force enumeration visited more nodes than allowed.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Engine caps. Defaults can be overridden through the environment:
///   TRAILCOUNT_MAX_QUBITS, TRAILCOUNT_MAX_MONOMIALS, TRAILCOUNT_MAX_VISITS
struct Limits {
    std::size_t max_qubits = 24;
    std::size_t max_monomials = 10'000'000;
    std::uint64_t max_visits = 100'000'000;

    static Limits from_env();
};

/// Vertex handle. Stored 0-based; the external (file, CLI, report) label is
/// 1-based.
struct Vertex {
    std::size_t index = 0;

    static constexpr Vertex from_label(std::size_t label) { return Vertex{label - 1}; }
    constexpr std::size_t label() const { return index + 1; }

    friend constexpr bool operator==(Vertex, Vertex) = default;
    friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

namespace literals {
/// `3_v` is the vertex labelled 3 (index 2).
constexpr Vertex operator""_v(unsigned long long label)
{
    return Vertex::from_label(static_cast<std::size_t>(label));
}
} // namespace literals

} // namespace trailcount
