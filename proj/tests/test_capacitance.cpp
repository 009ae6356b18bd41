#include <cmath>

#include "doctest.h"
#include "qrelax/capacitance.hpp"
#include "qrelax/constants.hpp"

using namespace qrelax;

TEST_CASE("closed-form self-capacitances at D = 50 um, a = 5 um") {
    LoopGeometry g(50e-6, 5e-6);
    CHECK(sphere_capacitance(50e-6) == 2.7816251386196763e-15);
    CHECK(disc_capacitance(50e-6) == 1.7708375625600002e-15);
    CHECK(disc_capacitance(100e-6) == 3.5416751251200004e-15);
    CHECK(toroid_capacitance(g) == doctest::Approx(1.994221813117441e-15).epsilon(1e-15));

    LoopGeometry on_si(50e-6, 5e-6, 10.0 * constants::eps0);
    CHECK(toroid_on_substrate(on_si) == doctest::Approx(1.0968219972145925e-14).epsilon(1e-15));
}

TEST_CASE("every estimate is linear in the diameter") {
    const double k = 7.25;
    CHECK(sphere_capacitance(k * 50e-6) == doctest::Approx(k * sphere_capacitance(50e-6)).epsilon(1e-15));
    CHECK(disc_capacitance(k * 50e-6) == doctest::Approx(k * disc_capacitance(50e-6)).epsilon(1e-15));
    // The toroid also rescales the wire width, keeping 8D/a fixed.
    LoopGeometry g(50e-6, 5e-6);
    LoopGeometry gk(k * 50e-6, k * 5e-6);
    CHECK(toroid_capacitance(gk) == doctest::Approx(k * toroid_capacitance(g)).epsilon(1e-15));
}

TEST_CASE("disc to sphere ratio is 2/pi") {
    double r = disc_capacitance(50e-6) / sphere_capacitance(50e-6);
    CHECK(r == doctest::Approx(2.0 / constants::pi).epsilon(1e-15));
}

TEST_CASE("vacuum substrate reduces to the isolated loop") {
    LoopGeometry g(50e-6, 5e-6, constants::eps0);
    CHECK(toroid_on_substrate(g) == toroid_capacitance(g));
}

TEST_CASE("substrate scaling is the permittivity average") {
    LoopGeometry vac(50e-6, 5e-6);
    LoopGeometry er10(50e-6, 5e-6, 10.0 * constants::eps0);
    double ratio = toroid_on_substrate(er10) / toroid_capacitance(vac);
    CHECK(ratio == doctest::Approx((10.0 + 1.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("toroid capacitance grows with wire width") {
    double prev = 0.0;
    for (double a : {1e-6, 2e-6, 5e-6, 10e-6}) {
        double c = toroid_capacitance(LoopGeometry(50e-6, a));
        CHECK(c > prev);
        prev = c;
    }
    CHECK(toroid_capacitance(LoopGeometry(50e-6, 1e-6)) ==
          doctest::Approx(1.458530386322049e-15).epsilon(1e-15));
}

TEST_CASE("thin wires sit below the sphere bound") {
    for (double a : {0.5e-6, 1e-6, 2e-6, 5e-6}) {
        LoopGeometry g(50e-6, a);
        CHECK(g.thin_wire());
        CHECK(toroid_capacitance(g) < sphere_capacitance(g.D));
    }
    CHECK_FALSE(LoopGeometry(50e-6, 6e-6).thin_wire());
    CHECK(LoopGeometry(50e-6, 5e-6).thin_wire());  // boundary D = 10a counts as thin
}

TEST_CASE("series combination") {
    CHECK(series_effective_capacitance(10e-15, 10e-15) == 5e-15);
    CHECK(series_effective_capacitance(10e-15, 1e-15) ==
          doctest::Approx(9.090909090909092e-16).epsilon(1e-15));
    // Dominated by the smaller plate; always below both.
    CHECK(series_effective_capacitance(10e-15, 1e-15) < 1e-15);
    CHECK_THROWS_AS(series_effective_capacitance(0.0, 1e-15), NonPositiveCapacitance);
    CHECK_THROWS_AS(series_effective_capacitance(1e-15, -2e-15), NonPositiveCapacitance);
}

TEST_CASE("geometry validation") {
    CHECK_THROWS_AS(LoopGeometry(0.0, 5e-6), NonPositiveDimension);
    CHECK_THROWS_AS(LoopGeometry(-50e-6, 5e-6), NonPositiveDimension);
    CHECK_THROWS_AS(LoopGeometry(50e-6, 0.0), NonPositiveDimension);
    CHECK_THROWS_AS(LoopGeometry(50e-6, -5e-6), NonPositiveDimension);
    CHECK_THROWS_AS(LoopGeometry(50e-6, 5e-6, 0.5 * constants::eps0), InvalidParameter);
    // a >= 8D leaves no positive logarithm to divide by.
    CHECK_THROWS_AS(LoopGeometry(50e-6, 8.0 * 50e-6), DegenerateLogarithm);
    CHECK_THROWS_AS(LoopGeometry(50e-6, 10.0 * 50e-6), DegenerateLogarithm);
    CHECK_THROWS_AS(sphere_capacitance(0.0), NonPositiveDimension);
    CHECK_THROWS_AS(disc_capacitance(-1e-6), NonPositiveDimension);
}
