#pragma once

#include <string>

#include "qrelax/errors.hpp"
#include "qrelax/immittance.hpp"

namespace qrelax {

// T1 with an explicit infinity tag. The tag, never a floating-point inf,
// marks lossless environments; it serializes as the string "inf".
struct RelaxationTime {
    double seconds = 0.0;
    bool infinite = false;

    static RelaxationTime inf() { return {0.0, true}; }
    static RelaxationTime of(double s) { return {s, false}; }

    std::string str() const;

    bool operator==(const RelaxationTime&) const = default;
};

// Junction capacitance, loop inductance, Josephson inductance (negative for
// a junction biased at phase pi) and the anharmonicity rescale factor alpha.
// Construct through one of the factories; the other inductance parameter is
// derived from LJ = -Phi0/(2*pi*I0).
struct QubitParams {
    double C = 0.0;      // junction/shunt capacitance, F
    double L = 0.0;      // loop inductance, H
    double LJ = 0.0;     // Josephson inductance, H (may be negative)
    double I0 = 0.0;     // junction critical current, A
    double alpha = 1.0;  // anharmonicity factor, hard limits [0.5, 10]

    static QubitParams from_critical_current(double C, double L, double I0, double alpha = 1.0);
    static QubitParams from_josephson_inductance(double C, double L, double LJ, double alpha = 1.0);

    // alpha is expected in [1, 3] for realistic devices; callers should warn
    // (not fail) outside this band. Outside [0.5, 10] construction throws.
    bool alpha_typical() const { return alpha >= 1.0 && alpha <= 3.0; }
};

// Temperature and qubit angular frequency for the thermal T1 factor.
struct ThermalState {
    double T = 0.0;      // K, >= 0
    double omega = 0.0;  // rad/s, > 0

    ThermalState(double T, double omega);
};

// Dimensionless |<0|delta|1>| of the qubit phase operator.
struct PhaseMatrixElement {
    double value;

    explicit PhaseMatrixElement(double value);
};

// -Phi0/(2*pi*I0); always negative for I0 > 0.
double josephson_inductance(double I0);

// L*LJ/(L+LJ). Rejects the near-cancellation regime |L+LJ| < 1e-6*L where
// the linear resonator model degenerates.
double effective_parallel_inductance(double L, double LJ);

// 1/sqrt(Lp*(C+Ceff)), rad/s. Convenience only: T1 formulas take omega
// directly since near-cancelling L and LJ make this marginal.
double loaded_resonance_frequency(double Lp, double C, double Ceff);

// alpha*C/Re{Y}. Y must be in siemens. Re{Y} <= 1e-30 S reports the
// infinite-T1 sentinel (lossless environment).
RelaxationTime t1_classical(double C, const ComplexImmittance& Y, double alpha);

// (2*pi/Phi0)*sqrt(hbar/(2*omega*C)) for the harmonic-oscillator approximation.
PhaseMatrixElement harmonic_matrix_element(double omega, double C);

// (2*pi/Phi0)^2 * (hbar/(2*omega)) * coth(hbar*omega/(2*kB*T)) / (m^2*Re{Y}).
// Implemented exactly as stated, coth in the numerator, so T1 grows with
// temperature; standard dissipation theory predicts the opposite trend. At
// T = 0 the coth factor is exactly 1 and the result matches t1_classical
// with alpha = 1 when m comes from harmonic_matrix_element.
RelaxationTime t1_quantum(const ThermalState& state, const ComplexImmittance& Y,
                          const PhaseMatrixElement& m);

// alpha*(C+Ceff)/(Z0*(omega*Ceff)^2), valid for omega*Ceff*Z0 < 0.1
// (RegimeViolation otherwise).
double t1_closed_form_lumped(double C, double Ceff, double omega, double Z0, double alpha);

// beta * t1_closed_form_lumped(...): the distributed-ground improvement.
double t1_distributed_estimate(double C, double Ceff, double omega, double Z0, double alpha,
                               double beta);

}  // namespace qrelax
