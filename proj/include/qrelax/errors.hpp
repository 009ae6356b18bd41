#pragma once

#include <stdexcept>
#include <string>

namespace qrelax {

// Common base so callers can catch every library failure in one place.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QRELAX_ERROR(NAME)                                              \
    struct NAME : Error {                                               \
        explicit NAME(const std::string& msg) : Error(msg) {}           \
    }

QRELAX_ERROR(NonPositiveFrequency);    // omega <= 0: element laws undefined at DC here
QRELAX_ERROR(SingularNetwork);         // pivot underflow: floating subnetwork or lossless resonance
QRELAX_ERROR(InfiniteAdmittance);      // port voltage collapsed below 1e-300 V
QRELAX_ERROR(UnknownElementLabel);
QRELAX_ERROR(NonPositiveDimension);
QRELAX_ERROR(DegenerateLogarithm);     // ln(8D/a) <= 0
QRELAX_ERROR(NonPositiveCapacitance);
QRELAX_ERROR(NonPositiveCurrent);
QRELAX_ERROR(DegenerateCancellation);  // |L+LJ| < 1e-6*L: parallel inductance blows up
QRELAX_ERROR(NonPositiveInductance);
QRELAX_ERROR(LosslessEnvironment);     // Re{Y} at or below the 1e-30 S floor
QRELAX_ERROR(RegimeViolation);         // omega*Ceff*Z0 >= 0.1: closed forms out of regime
QRELAX_ERROR(NonPositiveLength);
QRELAX_ERROR(MalformedValue);          // not a decimal number
QRELAX_ERROR(UnknownSuffix);           // trailing letter is not one of f p n u m k M G
QRELAX_ERROR(InvalidParameter);        // generic precondition violation

#undef QRELAX_ERROR

// Netlist text errors carry the 1-based source line.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& reason)
        : Error("line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

}  // namespace qrelax
