#pragma once

#include <cmath>
#include <complex>

#include "qrelax/errors.hpp"

namespace qrelax {

// A complex admittance (siemens) or impedance (ohms) at one frequency.
struct ComplexImmittance {
    enum class Unit { siemens, ohms };

    double re = 0.0;
    double im = 0.0;
    Unit unit = Unit::siemens;

    std::complex<double> value() const { return {re, im}; }

    static ComplexImmittance admittance(std::complex<double> y) {
        return checked(y.real(), y.imag(), Unit::siemens);
    }
    static ComplexImmittance impedance(std::complex<double> z) {
        return checked(z.real(), z.imag(), Unit::ohms);
    }

    // 1/value with the unit flipped; admittance <-> impedance.
    ComplexImmittance reciprocal() const {
        std::complex<double> inv = 1.0 / value();
        return checked(inv.real(), inv.imag(),
                       unit == Unit::siemens ? Unit::ohms : Unit::siemens);
    }

private:
    static ComplexImmittance checked(double re, double im, Unit unit) {
        if (!std::isfinite(re) || !std::isfinite(im))
            throw InvalidParameter("immittance parts must be finite");
        return {re, im, unit};
    }
};

}  // namespace qrelax
