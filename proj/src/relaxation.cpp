#include "qrelax/relaxation.hpp"

#include <cmath>
#include <cstdio>

#include "qrelax/constants.hpp"

namespace qrelax {

using constants::hbar;
using constants::kB;
using constants::Phi0;
using constants::pi;

namespace {

// Floor below which the environment counts as lossless and T1 is infinite.
constexpr double lossless_floor = 1e-30;  // S

void check_alpha(double alpha) {
    if (!(alpha >= 0.5 && alpha <= 10.0))
        throw InvalidParameter("alpha outside the hard limits [0.5, 10]");
}

void require_siemens(const ComplexImmittance& Y) {
    if (Y.unit != ComplexImmittance::Unit::siemens)
        throw InvalidParameter("Y must be an admittance in siemens");
}

}  // namespace

std::string RelaxationTime::str() const {
    if (infinite) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", seconds);
    return buf;
}

QubitParams QubitParams::from_critical_current(double C, double L, double I0, double alpha) {
    if (C <= 0.0) throw NonPositiveCapacitance("junction capacitance must be positive");
    if (L <= 0.0) throw NonPositiveInductance("loop inductance must be positive");
    check_alpha(alpha);
    QubitParams q;
    q.C = C;
    q.L = L;
    q.I0 = I0;
    q.LJ = josephson_inductance(I0);
    q.alpha = alpha;
    return q;
}

QubitParams QubitParams::from_josephson_inductance(double C, double L, double LJ, double alpha) {
    if (C <= 0.0) throw NonPositiveCapacitance("junction capacitance must be positive");
    if (L <= 0.0) throw NonPositiveInductance("loop inductance must be positive");
    if (LJ == 0.0) throw InvalidParameter("Josephson inductance must be nonzero");
    check_alpha(alpha);
    QubitParams q;
    q.C = C;
    q.L = L;
    q.LJ = LJ;
    // Inverting LJ = -Phi0/(2*pi*I0); negative for a junction biased away
    // from phase pi, where this linear model is a stretch anyway.
    q.I0 = -Phi0 / (2.0 * pi * LJ);
    q.alpha = alpha;
    return q;
}

ThermalState::ThermalState(double T_, double omega_) : T(T_), omega(omega_) {
    if (T < 0.0) throw InvalidParameter("temperature must be non-negative");
    if (omega <= 0.0) throw NonPositiveFrequency("qubit frequency must be positive");
}

PhaseMatrixElement::PhaseMatrixElement(double value_) : value(value_) {
    if (value <= 0.0) throw InvalidParameter("matrix element must be positive");
}

double josephson_inductance(double I0) {
    if (I0 <= 0.0) throw NonPositiveCurrent("critical current must be positive");
    return -Phi0 / (2.0 * pi * I0);
}

double effective_parallel_inductance(double L, double LJ) {
    if (L <= 0.0) throw NonPositiveInductance("loop inductance must be positive");
    if (std::fabs(L + LJ) < 1e-6 * L)
        throw DegenerateCancellation("L and LJ cancel; the linear resonator model is singular");
    return L * LJ / (L + LJ);
}

double loaded_resonance_frequency(double Lp, double C, double Ceff) {
    if (Lp <= 0.0) throw NonPositiveInductance("parallel inductance must be positive for an oscillatory mode");
    if (C <= 0.0) throw NonPositiveCapacitance("junction capacitance must be positive");
    if (Ceff < 0.0) throw NonPositiveCapacitance("effective coupling capacitance must be non-negative");
    return 1.0 / std::sqrt(Lp * (C + Ceff));
}

RelaxationTime t1_classical(double C, const ComplexImmittance& Y, double alpha) {
    if (C <= 0.0) throw NonPositiveCapacitance("capacitance must be positive");
    check_alpha(alpha);
    require_siemens(Y);
    if (Y.re <= lossless_floor) return RelaxationTime::inf();
    // alpha times a base value, so T1 is exactly linear in alpha.
    return RelaxationTime::of(alpha * (C / Y.re));
}

PhaseMatrixElement harmonic_matrix_element(double omega, double C) {
    if (omega <= 0.0) throw NonPositiveFrequency("omega must be positive");
    if (C <= 0.0) throw NonPositiveCapacitance("capacitance must be positive");
    return PhaseMatrixElement((2.0 * pi / Phi0) * std::sqrt(hbar / (2.0 * omega * C)));
}

RelaxationTime t1_quantum(const ThermalState& state, const ComplexImmittance& Y,
                          const PhaseMatrixElement& m) {
    require_siemens(Y);
    if (Y.re <= lossless_floor) return RelaxationTime::inf();
    // coth sits in the numerator as stated, so this T1 grows with T; the
    // header notes that standard dissipation theory trends the other way.
    double factor = 1.0;
    if (state.T > 0.0) factor = 1.0 / std::tanh(hbar * state.omega / (2.0 * kB * state.T));
    double a = 2.0 * pi / Phi0;
    return RelaxationTime::of(a * a * (hbar / (2.0 * state.omega)) * factor /
                              (m.value * m.value * Y.re));
}

double t1_closed_form_lumped(double C, double Ceff, double omega, double Z0, double alpha) {
    if (C <= 0.0 || Ceff <= 0.0) throw NonPositiveCapacitance("capacitances must be positive");
    if (omega <= 0.0) throw NonPositiveFrequency("omega must be positive");
    if (Z0 <= 0.0) throw InvalidParameter("Z0 must be positive");
    check_alpha(alpha);
    double x = omega * Ceff * Z0;
    if (x >= 0.1)
        throw RegimeViolation("omega*Ceff*Z0 >= 0.1: outside the small-coupling regime of the closed form");
    return alpha * ((C + Ceff) / (Z0 * (omega * Ceff) * (omega * Ceff)));
}

double t1_distributed_estimate(double C, double Ceff, double omega, double Z0, double alpha,
                               double beta) {
    if (beta <= 0.0) throw InvalidParameter("beta must be positive");
    // One multiply on top of the lumped form keeps T1 exactly linear in beta.
    return beta * t1_closed_form_lumped(C, Ceff, omega, Z0, alpha);
}

}  // namespace qrelax
