#pragma once

#include "qrelax/constants.hpp"
#include "qrelax/errors.hpp"

namespace qrelax {

// Thin-film loop described by its mean diameter D and trace width a. The
// closed forms below treat it as a wire torus, which is an estimate for
// square/rectangular loops. Ground is taken to be at infinity, so every
// result is a lower bound on the capacitance to a nearby ground plane.
struct LoopGeometry {
    double D;         // loop diameter, m
    double a;         // wire width, m
    double eps_subs;  // substrate permittivity, F/m (>= eps0)

    explicit LoopGeometry(double D, double a, double eps_subs = constants::eps0);

    // The torus formula assumes D >> a; flag rather than reject thick wires.
    bool thin_wire() const { return D >= 10.0 * a; }
};

// 2*pi*eps0*D, isolated conducting sphere of diameter D.
double sphere_capacitance(double D);

// 4*eps0*D, isolated conducting disc of diameter D.
double disc_capacitance(double D);

// 2*pi^2*eps0*D / ln(8D/a), isolated loop in vacuum (natural logarithm).
double toroid_capacitance(const LoopGeometry& g);

// pi^2*(eps_subs + eps0)*D / ln(8D/a): loop on a substrate, permittivity
// taken as the arithmetic mean of vacuum and substrate.
double toroid_on_substrate(const LoopGeometry& g);

// Series combination (1/Cg + 1/Cc)^-1.
double series_effective_capacitance(double Cg, double Cc);

}  // namespace qrelax
