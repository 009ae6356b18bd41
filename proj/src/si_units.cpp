#include "qrelax/si_units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "qrelax/errors.hpp"

namespace qrelax {

namespace {

struct Suffix {
    char letter;
    int exp;
    double mult;
};

constexpr std::array<Suffix, 8> suffixes = {{
    {'f', -15, 1e-15}, {'p', -12, 1e-12}, {'n', -9, 1e-9}, {'u', -6, 1e-6},
    {'m', -3, 1e-3},   {'k', 3, 1e3},     {'M', 6, 1e6},   {'G', 9, 1e9},
}};

bool parse_plain(std::string_view s, double& out) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

double parse_si(std::string_view token) {
    if (token.empty()) throw MalformedValue("empty value");

    double plain;
    if (parse_plain(token, plain)) {
        if (!std::isfinite(plain)) throw MalformedValue("non-finite value '" + std::string(token) + "'");
        return plain;
    }

    std::string_view mant_text = token.substr(0, token.size() - 1);
    double mantissa;
    if (!parse_plain(mant_text, mantissa) || !std::isfinite(mantissa))
        throw MalformedValue("malformed value '" + std::string(token) + "'");

    char last = token.back();
    for (const Suffix& s : suffixes) {
        if (s.letter != last) continue;
        // The suffix is decimal notation, so fold its power of ten into the
        // text and convert once; "10f" then equals the literal 10e-15 bit for
        // bit instead of picking up a second rounding from mantissa * 1e-15.
        std::string digits(mant_text);
        int exp = s.exp;
        auto epos = digits.find_first_of("eE");
        if (epos != std::string::npos) {
            exp += std::atoi(digits.c_str() + epos + 1);
            digits.erase(epos);
        }
        digits += 'e' + std::to_string(exp);
        double out;
        parse_plain(digits, out);
        return out;
    }

    throw UnknownSuffix(std::string("unknown SI suffix '") + last + "' in '" + std::string(token) + "'");
}

namespace {

// Shortest %.*g rendering of mantissa such that parse_si(mantissa + suffix)
// reproduces x exactly; empty string when no precision works.
std::string exact_mantissa(double x, double mult, char suffix) {
    double mantissa = x / mult;
    if (!std::isfinite(mantissa)) return {};
    char buf[40];
    // Prefer renderings without their own exponent ("50", not "5e+01");
    // fall back to exponent forms so extreme magnitudes still round-trip.
    for (int pass = 0; pass < 2; ++pass) {
        for (int prec = 1; prec <= 17; ++prec) {
            std::snprintf(buf, sizeof buf, "%.*g", prec, mantissa);
            std::string candidate(buf);
            if (pass == 0 && candidate.find_first_of("eE") != std::string::npos) continue;
            if (suffix) candidate += suffix;
            try {
                if (parse_si(candidate) == x) return candidate;
            } catch (const Error&) {
                return {};
            }
        }
    }
    return {};
}

}  // namespace

std::string format_si(double value) {
    if (value == 0.0) return "0";
    if (!std::isfinite(value)) throw InvalidParameter("cannot format a non-finite value");

    double mag = std::fabs(value);

    // A suffix is worth using when it lands the mantissa in [1, 1000).
    if (mag < 1.0 || mag >= 1000.0) {
        for (const Suffix& s : suffixes) {
            double mant = mag / s.mult;
            if (mant >= 1.0 && mant < 1000.0) {
                std::string r = exact_mantissa(value, s.mult, s.letter);
                if (!r.empty()) return r;
                break;
            }
        }
    }

    // Plain decimal; %.17g always round-trips.
    std::string r = exact_mantissa(value, 1.0, '\0');
    if (!r.empty()) return r;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace qrelax
