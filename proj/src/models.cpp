#include "qrelax/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "qrelax/capacitance.hpp"
#include "qrelax/constants.hpp"
#include "qrelax/solver.hpp"

namespace qrelax {

using constants::pi;

void CouplingEnvironment::validate() const {
    if (Cg <= 0.0) throw NonPositiveCapacitance("Cg must be positive");
    if (Cc <= 0.0) throw NonPositiveCapacitance("Cc must be positive");
    if (Z0 <= 0.0) throw InvalidParameter("Z0 must be positive");
    if (Lg && *Lg <= 0.0) throw NonPositiveInductance("Lg must be positive when present");
    if (n < 1 || n > 1024) throw InvalidParameter("segment count n must be in [1, 1024]");
    if (tap_index < 0 || tap_index > n) throw InvalidParameter("tap_index must be in [0, n]");
}

void SweepSpec::validate() const {
    if (f_start <= 0.0) throw NonPositiveFrequency("f_start must be positive");
    if (f_stop <= f_start) throw InvalidParameter("f_stop must exceed f_start");
    if (points < 2) throw InvalidParameter("a sweep needs at least 2 points");
}

std::vector<double> SweepSpec::frequencies() const {
    validate();
    std::vector<double> f(points);
    if (spacing == Spacing::linear) {
        double step = (f_stop - f_start) / (points - 1);
        for (int i = 0; i < points; ++i) f[i] = f_start + step * i;
    } else {
        double lstart = std::log(f_start);
        double lstep = (std::log(f_stop) - lstart) / (points - 1);
        for (int i = 0; i < points; ++i) f[i] = std::exp(lstart + lstep * i);
    }
    f.back() = f_stop;
    return f;
}

bool SweepResult::any_singular() const {
    return std::any_of(points.begin(), points.end(),
                       [](const SweepPoint& p) { return p.singular; });
}

namespace {

void validate_qubit(const QubitParams& q) {
    if (q.C <= 0.0) throw NonPositiveCapacitance("junction capacitance must be positive");
    if (q.L <= 0.0) throw NonPositiveInductance("loop inductance must be positive");
    if (q.LJ == 0.0) throw InvalidParameter("Josephson inductance must be nonzero");
}

// Ladder positions 0..n onto node ids; both junction terminals are port nodes.
constexpr NodeId port_a = 1;
constexpr NodeId port_b = 2;

NodeId ladder_node(int i, int n) {
    if (i == 0) return port_a;
    if (i == n) return port_b;
    return 2 + i;
}

NodeId bias_node(int n) { return n + 2; }

void add(Netlist& net, ElementKind kind, std::string label, NodeId n1, NodeId n2, double value) {
    net.elements.push_back({kind, n1, n2, value, std::move(label)});
}

void add_bias_termination(Netlist& net, const CouplingEnvironment& env, NodeId bias) {
    add(net, ElementKind::resistor, "Rz0", bias, 0, env.Z0);
    if (env.Lg) add(net, ElementKind::inductor, "Lg", bias, 0, *env.Lg);
}

// Series L/n segments from one junction terminal to the other plus the
// junction branch. Ground capacitors are left to the caller since the
// asymmetric and symmetric builders place them differently.
void add_junction_and_ladder(Netlist& net, const QubitParams& q, int n) {
    add(net, ElementKind::inductor, "Lj", port_a, port_b, q.LJ);
    add(net, ElementKind::capacitor, "Cj", port_a, port_b, q.C);
    for (int i = 1; i <= n; ++i)
        add(net, ElementKind::inductor, "L" + std::to_string(i), ladder_node(i - 1, n),
            ladder_node(i, n), q.L / n);
}

}  // namespace

Netlist build_lumped_model(const QubitParams& q, const CouplingEnvironment& env) {
    validate_qubit(q);
    env.validate();
    Netlist net;
    net.port = {port_a, port_b};
    add_junction_and_ladder(net, q, 1);
    add(net, ElementKind::capacitor, "Cg1", port_b, 0, env.Cg);
    add(net, ElementKind::capacitor, "Cc", port_a, bias_node(1), env.Cc);
    add_bias_termination(net, env, bias_node(1));
    net.validate();
    return net;
}

Netlist build_distributed_model(const QubitParams& q, const CouplingEnvironment& env) {
    validate_qubit(q);
    env.validate();
    const int n = env.n;
    Netlist net;
    net.port = {port_a, port_b};
    add_junction_and_ladder(net, q, n);
    // One Cg/n after each segment; for n = 1 this collapses to the lumped
    // netlist element for element, so beta_factor(n=1) is exactly 1.
    for (int i = 1; i <= n; ++i)
        add(net, ElementKind::capacitor, "Cg" + std::to_string(i), ladder_node(i, n), 0, env.Cg / n);
    add(net, ElementKind::capacitor, "Cc", ladder_node(env.tap_index, n), bias_node(n), env.Cc);
    add_bias_termination(net, env, bias_node(n));
    net.validate();
    return net;
}

namespace {

// Trapezoid placement: Cg/2n on both end positions, Cg/n inside. The layout
// is exactly mirror symmetric about the ladder center, which is what makes
// the symmetric builders' Re{Y} vanish to rounding rather than to O(1/n).
void add_symmetric_ground_caps(Netlist& net, double Cg, int n) {
    for (int i = 0; i <= n; ++i) {
        double value = (i == 0 || i == n) ? Cg / (2.0 * n) : Cg / n;
        add(net, ElementKind::capacitor, "Cg" + std::to_string(i), ladder_node(i, n), 0, value);
    }
}

void require_even(int n) {
    if (n < 2 || n % 2 != 0)
        throw InvalidParameter("this topology needs an even segment count n >= 2");
}

}  // namespace

Netlist build_symmetric_single_lead(const QubitParams& q, const CouplingEnvironment& env,
                                    double cc1, double cc2, int k1, int k2) {
    validate_qubit(q);
    env.validate();
    require_even(env.n);
    const int n = env.n;
    if (k1 < 0) k1 = n / 4;
    if (k2 < 0) k2 = n - k1;
    if (k1 > n || k2 < 0 || k2 > n) throw InvalidParameter("tap positions must lie in [0, n]");
    if (cc1 < 0.0 || cc2 < 0.0) throw NonPositiveCapacitance("tap capacitances cannot be negative");

    Netlist net;
    net.port = {port_a, port_b};
    add_junction_and_ladder(net, q, n);
    add_symmetric_ground_caps(net, env.Cg, n);
    // A zero tap capacitance means "capacitor removed", not a zero-valued element.
    if (cc1 > 0.0) add(net, ElementKind::capacitor, "Cc1", ladder_node(k1, n), bias_node(n), cc1);
    if (cc2 > 0.0) add(net, ElementKind::capacitor, "Cc2", ladder_node(k2, n), bias_node(n), cc2);
    if (cc1 <= 0.0 && cc2 <= 0.0) throw NonPositiveCapacitance("at least one tap capacitance must be positive");
    add_bias_termination(net, env, bias_node(n));
    net.validate();
    return net;
}

Netlist build_center_tap(const QubitParams& q, const CouplingEnvironment& env) {
    validate_qubit(q);
    env.validate();
    require_even(env.n);
    const int n = env.n;
    Netlist net;
    net.port = {port_a, port_b};
    add_junction_and_ladder(net, q, n);
    add_symmetric_ground_caps(net, env.Cg, n);
    add(net, ElementKind::capacitor, "Cc", ladder_node(n / 2, n), bias_node(n), env.Cc);
    add_bias_termination(net, env, bias_node(n));
    net.validate();
    return net;
}

Netlist build_grounded_bias(const QubitParams& q, const CouplingEnvironment& env) {
    validate_qubit(q);
    env.validate();
    double Ceff = series_effective_capacitance(env.Cg, env.Cc);
    Netlist net;
    net.port = {port_a, 0};
    add(net, ElementKind::inductor, "Lj", port_a, 0, q.LJ);
    add(net, ElementKind::capacitor, "Cj", port_a, 0, q.C);
    add(net, ElementKind::inductor, "L1", port_a, 0, q.L);
    add(net, ElementKind::capacitor, "Ceff", port_a, port_b, Ceff);
    add_bias_termination(net, env, port_b);
    net.validate();
    return net;
}

Netlist environment_of(const Netlist& circuit) {
    Netlist env;
    env.port = circuit.port;
    for (const Element& e : circuit.elements) {
        bool across_port = (e.n1 == circuit.port.first && e.n2 == circuit.port.second) ||
                           (e.n1 == circuit.port.second && e.n2 == circuit.port.first);
        if (!across_port) env.elements.push_back(e);
    }
    if (env.elements.empty()) throw InvalidParameter("circuit has no environment beyond the port branch");
    return env;
}

double beta_factor(const QubitParams& q, const CouplingEnvironment& env, double omega) {
    ComplexImmittance y_lumped =
        driving_point_admittance(environment_of(build_lumped_model(q, env)), omega);
    ComplexImmittance y_dist =
        driving_point_admittance(environment_of(build_distributed_model(q, env)), omega);
    if (numerically_lossless(y_lumped) || numerically_lossless(y_dist))
        throw LosslessEnvironment("beta is undefined for a lossless model");
    RelaxationTime t_lumped = t1_classical(q.C, y_lumped, q.alpha);
    RelaxationTime t_dist = t1_classical(q.C, y_dist, q.alpha);
    if (t_lumped.infinite || t_dist.infinite)
        throw LosslessEnvironment("beta is undefined for a lossless model");
    return t_dist.seconds / t_lumped.seconds;
}

double wire_inductance(double length) {
    if (length <= 0.0) throw NonPositiveLength("wire length must be positive");
    return 1e-6 * length;  // 1 nH per mm
}

bool numerically_lossless(const ComplexImmittance& Y) {
    return std::fabs(Y.re) <= 1e-12 * std::fabs(Y.im);
}

namespace {

SweepPoint eval_sweep_point(const Netlist& net, double f, double C_for_t1, double alpha) {
    SweepPoint p;
    p.f_hz = f;
    try {
        p.Y = driving_point_admittance(net, 2.0 * pi * f);
    } catch (const SingularNetwork&) {
        p.singular = true;
        return p;
    } catch (const InfiniteAdmittance&) {
        p.singular = true;
        return p;
    }
    if (numerically_lossless(p.Y) || p.Y.re <= 1e-30) {
        p.lossless = true;
        p.t1 = RelaxationTime::inf();
        return p;
    }
    p.r_eff = 1.0 / p.Y.re;
    p.t1 = t1_classical(C_for_t1, p.Y, alpha);
    return p;
}

unsigned sweep_thread_cap() {
    unsigned cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("QRELAX_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) cap = std::min<unsigned long>(v, 256);
    }
    return cap;
}

}  // namespace

SweepResult effective_resistance_sweep(const Netlist& net, const SweepSpec& spec,
                                       double C_for_t1, double alpha) {
    net.validate();
    std::vector<double> freqs = spec.frequencies();

    SweepResult result;
    result.points.resize(freqs.size());

    // Each point writes only its own slot, so the output is identical no
    // matter how many threads run.
    unsigned nthreads = std::min<unsigned>(sweep_thread_cap(), freqs.size());
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < freqs.size(); ++i)
            result.points[i] = eval_sweep_point(net, freqs[i], C_for_t1, alpha);
        return result;
    }

    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t)
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < freqs.size(); i += nthreads)
                result.points[i] = eval_sweep_point(net, freqs[i], C_for_t1, alpha);
        });
    for (std::thread& w : workers) w.join();
    return result;
}

}  // namespace qrelax
