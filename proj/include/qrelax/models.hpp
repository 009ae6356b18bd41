#pragma once

#include <optional>
#include <vector>

#include "qrelax/immittance.hpp"
#include "qrelax/netlist.hpp"
#include "qrelax/relaxation.hpp"

namespace qrelax {

// How the qubit couples to its bias wiring: capacitance to ground Cg,
// coupling capacitance Cc, bias-lead resistance Z0, optional grounding
// inductance Lg of the bias line, ladder segment count n and the node index
// (0..n along the loop) where Cc taps the ladder.
struct CouplingEnvironment {
    double Cg = 0.0;
    double Cc = 0.0;
    double Z0 = 50.0;
    std::optional<double> Lg;
    int n = 1;          // 1..1024
    int tap_index = 0;  // 0..n; 0 is the ladder end next to one junction terminal

    void validate() const;
};

struct SweepSpec {
    enum class Spacing { linear, log };

    double f_start = 0.0;  // Hz
    double f_stop = 0.0;   // Hz
    int points = 0;        // >= 2
    Spacing spacing = Spacing::linear;

    void validate() const;
    std::vector<double> frequencies() const;
};

struct SweepPoint {
    double f_hz = 0.0;
    ComplexImmittance Y;
    bool singular = false;  // solve failed at this frequency; numbers invalid
    bool lossless = false;  // |Re| <= 1e-12*|Im|: Reff and T1 carry the inf tag
    double r_eff = 0.0;     // ohms, valid when neither flag is set
    RelaxationTime t1;
};

struct SweepResult {
    std::vector<SweepPoint> points;

    bool any_singular() const;
};

// All builders return the full circuit: the qubit branch (loop inductance,
// Josephson inductance, junction capacitance) across the port plus the bias
// environment. T1 must be computed on the environment alone, otherwise the
// junction capacitance is double counted; environment_of() strips every
// element wired directly across the port (a pure susceptance there shifts
// Im{Y} only, and the loop ladder of the distributed builders is kept since
// it is part of the coupling path).
//
// Node layout shared by the builders: port is (1, 2) with ladder positions
// 0..n mapped to nodes 1, 3, 4, ..., n+1, 2 and the bias lead at node n+2;
// build_grounded_bias instead ports against ground, (1, 0).

// Floating qubit, one lumped cap each way: Cc from port node 1 to the bias
// lead, Cg from port node 2 to ground, Z0 (and Lg when present) from the
// bias lead to ground. The loss path is Cc -> Z0 -> Cg in series.
Netlist build_lumped_model(const QubitParams& q, const CouplingEnvironment& env);

// Loop inductance split into n series segments of L/n with Cg/n to ground
// after each segment; Cc taps ladder position env.tap_index. n = 1 is
// exactly the lumped topology.
Netlist build_distributed_model(const QubitParams& q, const CouplingEnvironment& env);

// Mirror-symmetric ladder (n even): ground capacitance split Cg/2n at both
// ends and Cg/n inside, cc1/cc2 tapping positions k1 and k2 (defaults n/4
// and n - k1) into one shared bias lead. A zero cc omits that capacitor.
Netlist build_symmetric_single_lead(const QubitParams& q, const CouplingEnvironment& env,
                                    double cc1, double cc2, int k1 = -1, int k2 = -1);

// Same symmetric ladder with a single Cc at the midpoint, position n/2.
Netlist build_center_tap(const QubitParams& q, const CouplingEnvironment& env);

// Bias lead grounded through Lg: series Ceff = (1/Cg+1/Cc)^-1 from the port
// to the bias lead, Z0 parallel Lg to ground. Omitting Lg gives the plain
// resistive-lead baseline.
Netlist build_grounded_bias(const QubitParams& q, const CouplingEnvironment& env);

// The circuit as seen from the port: every element directly across the port
// pair removed.
Netlist environment_of(const Netlist& circuit);

// T1(distributed)/T1(lumped) at omega, both through driving-point admittance
// of the environment and t1_classical with the same alpha. Converged for
// n >= 16; n = 1 gives exactly 1.
double beta_factor(const QubitParams& q, const CouplingEnvironment& env, double omega);

// 1 nH per mm of wire.
double wire_inductance(double length);

// True when |Re{Y}| <= 1e-12*|Im{Y}|: the residual real part is numerical
// noise and the environment is treated as lossless (T1 infinite).
bool numerically_lossless(const ComplexImmittance& Y);

// Evaluates the netlist over the grid, recording Y, Reff = 1/Re{Y} and T1
// from t1_classical(C_for_t1, Y, alpha). Singular frequencies are flagged
// and the sweep continues. Points are independent; they may be evaluated in
// parallel (QRELAX_THREADS caps the thread count) with results identical to
// sequential execution.
SweepResult effective_resistance_sweep(const Netlist& net, const SweepSpec& spec,
                                       double C_for_t1, double alpha);

}  // namespace qrelax
