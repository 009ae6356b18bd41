#pragma once

#include <string>
#include <string_view>

namespace qrelax {

// Parses a decimal number with an optional engineering suffix from
// {f p n u m k M G} (case sensitive). Throws MalformedValue or UnknownSuffix.
double parse_si(std::string_view token);

// Formats a value so that parse_si(format_si(x)) == x bit for bit. Prefers the
// shortest mantissa with a suffix that puts the mantissa in [1, 1000); falls
// back to plain scientific notation when no suffix round-trips.
std::string format_si(double value);

}  // namespace qrelax
