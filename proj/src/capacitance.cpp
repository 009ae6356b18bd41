#include "qrelax/capacitance.hpp"

#include <cmath>

namespace qrelax {

using constants::eps0;
using constants::pi;

LoopGeometry::LoopGeometry(double D_, double a_, double eps_subs_)
    : D(D_), a(a_), eps_subs(eps_subs_) {
    if (D <= 0.0) throw NonPositiveDimension("loop diameter must be positive");
    if (a <= 0.0) throw NonPositiveDimension("wire width must be positive");
    if (eps_subs < eps0) throw InvalidParameter("substrate permittivity below vacuum");
    if (8.0 * D / a <= 1.0) throw DegenerateLogarithm("ln(8D/a) is not positive");
}

double sphere_capacitance(double D) {
    if (D <= 0.0) throw NonPositiveDimension("sphere diameter must be positive");
    return 2.0 * pi * eps0 * D;
}

double disc_capacitance(double D) {
    if (D <= 0.0) throw NonPositiveDimension("disc diameter must be positive");
    return 4.0 * eps0 * D;
}

namespace {

double loop_log(const LoopGeometry& g) {
    double u = std::log(8.0 * g.D / g.a);
    if (u <= 0.0) throw DegenerateLogarithm("ln(8D/a) is not positive");
    return u;
}

}  // namespace

double toroid_capacitance(const LoopGeometry& g) {
    return 2.0 * pi * pi * eps0 * g.D / loop_log(g);
}

double toroid_on_substrate(const LoopGeometry& g) {
    return pi * pi * (g.eps_subs + eps0) * g.D / loop_log(g);
}

double series_effective_capacitance(double Cg, double Cc) {
    if (Cg <= 0.0 || Cc <= 0.0) throw NonPositiveCapacitance("series capacitances must be positive");
    return 1.0 / (1.0 / Cg + 1.0 / Cc);
}

}  // namespace qrelax
