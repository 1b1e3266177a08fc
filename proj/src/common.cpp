#include "trailcount/common.hpp"

#include <cstdlib>
#include <string>

namespace trailcount {

std::string to_decimal(const Count& c) { return c.str(); }

Count count_from_decimal(const std::string& text)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("not a decimal count: '" + text + "'");
    return Count(text);
}

namespace {

template <typename T>
void override_from_env(const char* name, T& field)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0')
        throw InputError(std::string(name) + " is not an unsigned integer: " + raw);
    field = static_cast<T>(value);
}

} // namespace

Limits Limits::from_env()
{
    Limits limits;
    override_from_env("TRAILCOUNT_MAX_QUBITS", limits.max_qubits);
    override_from_env("TRAILCOUNT_MAX_MONOMIALS", limits.max_monomials);
    override_from_env("TRAILCOUNT_MAX_VISITS", limits.max_visits);
    return limits;
}

} // namespace trailcount
