#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "qrelax/capacitance.hpp"
#include "qrelax/constants.hpp"
#include "qrelax/models.hpp"
#include "qrelax/netlist.hpp"
#include "qrelax/relaxation.hpp"
#include "qrelax/si_units.hpp"
#include "qrelax/solver.hpp"

namespace py = pybind11;
using namespace qrelax;

namespace {

// Python callers get float('inf') instead of the tagged sentinel.
double unwrap(const RelaxationTime& t) {
    return t.infinite ? std::numeric_limits<double>::infinity() : t.seconds;
}

ComplexImmittance as_admittance(std::complex<double> y) {
    return ComplexImmittance::admittance(y);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "T1 relaxation estimates for capacitively biased superconducting qubits";

    py::register_exception<Error>(m, "QrelaxError", PyExc_ValueError);

    m.attr("eps0") = constants::eps0;
    m.attr("hbar") = constants::hbar;
    m.attr("kB") = constants::kB;
    m.attr("Phi0") = constants::Phi0;

    py::class_<Netlist>(m, "Netlist")
        .def_property_readonly("port", [](const Netlist& n) { return n.port; })
        .def_property_readonly("node_count", &Netlist::node_count)
        .def("__eq__", [](const Netlist& a, const Netlist& b) { return a == b; })
        .def("__repr__", [](const Netlist& n) { return serialize_netlist(n); });

    py::class_<QubitParams>(m, "QubitParams")
        .def_static("from_critical_current", &QubitParams::from_critical_current,
                    py::arg("C"), py::arg("L"), py::arg("I0"), py::arg("alpha") = 1.0)
        .def_static("from_josephson_inductance", &QubitParams::from_josephson_inductance,
                    py::arg("C"), py::arg("L"), py::arg("LJ"), py::arg("alpha") = 1.0)
        .def_readonly("C", &QubitParams::C)
        .def_readonly("L", &QubitParams::L)
        .def_readonly("LJ", &QubitParams::LJ)
        .def_readonly("I0", &QubitParams::I0)
        .def_readonly("alpha", &QubitParams::alpha)
        .def("alpha_typical", &QubitParams::alpha_typical);

    py::class_<CouplingEnvironment>(m, "CouplingEnvironment")
        .def(py::init([](double Cg, double Cc, double Z0, std::optional<double> Lg, int n,
                         int tap_index) {
                 CouplingEnvironment env{Cg, Cc, Z0, Lg, n, tap_index};
                 env.validate();
                 return env;
             }),
             py::arg("Cg"), py::arg("Cc"), py::arg("Z0") = 50.0, py::arg("Lg") = std::nullopt,
             py::arg("n") = 1, py::arg("tap_index") = 0)
        .def_readonly("Cg", &CouplingEnvironment::Cg)
        .def_readonly("Cc", &CouplingEnvironment::Cc)
        .def_readonly("Z0", &CouplingEnvironment::Z0)
        .def_readonly("Lg", &CouplingEnvironment::Lg)
        .def_readonly("n", &CouplingEnvironment::n)
        .def_readonly("tap_index", &CouplingEnvironment::tap_index);

    m.def("parse_si", &parse_si, py::arg("token"));
    m.def("format_si", &format_si, py::arg("value"));

    m.def("parse_netlist", [](const std::string& text) { return parse_netlist(text); },
          py::arg("text"));
    m.def("serialize_netlist", &serialize_netlist, py::arg("net"));

    m.def("driving_point_admittance",
          [](const Netlist& net, double omega) { return driving_point_admittance(net, omega).value(); },
          py::arg("net"), py::arg("omega"), "Complex admittance in siemens seen from the port.");
    m.def("branch_current_from_drive",
          [](const Netlist& net, std::pair<int, int> drive_port, const std::string& label,
             double omega) { return branch_current_from_drive(net, drive_port, label, omega); },
          py::arg("net"), py::arg("drive_port"), py::arg("label"), py::arg("omega"));

    m.def("sphere_capacitance", &sphere_capacitance, py::arg("D"));
    m.def("disc_capacitance", &disc_capacitance, py::arg("D"));
    m.def("toroid_capacitance",
          [](double D, double a) { return toroid_capacitance(LoopGeometry(D, a)); },
          py::arg("D"), py::arg("a"));
    m.def("toroid_on_substrate",
          [](double D, double a, double eps_subs) {
              return toroid_on_substrate(LoopGeometry(D, a, eps_subs));
          },
          py::arg("D"), py::arg("a"), py::arg("eps_subs"));
    m.def("series_effective_capacitance", &series_effective_capacitance, py::arg("Cg"),
          py::arg("Cc"));

    m.def("josephson_inductance", &josephson_inductance, py::arg("I0"));
    m.def("effective_parallel_inductance", &effective_parallel_inductance, py::arg("L"),
          py::arg("LJ"));
    m.def("loaded_resonance_frequency", &loaded_resonance_frequency, py::arg("Lp"), py::arg("C"),
          py::arg("Ceff"));
    m.def("harmonic_matrix_element",
          [](double omega, double C) { return harmonic_matrix_element(omega, C).value; },
          py::arg("omega"), py::arg("C"));
    m.def("t1_classical",
          [](double C, std::complex<double> Y, double alpha) {
              return unwrap(t1_classical(C, as_admittance(Y), alpha));
          },
          py::arg("C"), py::arg("Y"), py::arg("alpha") = 1.0);
    m.def("t1_quantum",
          [](double T, double omega, std::complex<double> Y, double matrix_element) {
              return unwrap(t1_quantum(ThermalState(T, omega), as_admittance(Y),
                                       PhaseMatrixElement(matrix_element)));
          },
          py::arg("T"), py::arg("omega"), py::arg("Y"), py::arg("matrix_element"));
    m.def("t1_closed_form_lumped", &t1_closed_form_lumped, py::arg("C"), py::arg("Ceff"),
          py::arg("omega"), py::arg("Z0"), py::arg("alpha") = 1.0);
    m.def("t1_distributed_estimate", &t1_distributed_estimate, py::arg("C"), py::arg("Ceff"),
          py::arg("omega"), py::arg("Z0"), py::arg("alpha"), py::arg("beta"));

    m.def("build_lumped_model", &build_lumped_model, py::arg("q"), py::arg("env"));
    m.def("build_distributed_model", &build_distributed_model, py::arg("q"), py::arg("env"));
    m.def("build_symmetric_single_lead", &build_symmetric_single_lead, py::arg("q"),
          py::arg("env"), py::arg("cc1"), py::arg("cc2"), py::arg("k1") = -1, py::arg("k2") = -1);
    m.def("build_center_tap", &build_center_tap, py::arg("q"), py::arg("env"));
    m.def("build_grounded_bias", &build_grounded_bias, py::arg("q"), py::arg("env"));
    m.def("environment_of", &environment_of, py::arg("circuit"));
    m.def("beta_factor", &beta_factor, py::arg("q"), py::arg("env"), py::arg("omega"));
    m.def("wire_inductance", &wire_inductance, py::arg("length"));
    m.def("numerically_lossless",
          [](std::complex<double> Y) { return numerically_lossless(as_admittance(Y)); },
          py::arg("Y"));

    m.def("effective_resistance_sweep",
          [](const Netlist& net, double f_start, double f_stop, int points,
             const std::string& spacing, double C, double alpha) {
              SweepSpec spec;
              spec.f_start = f_start;
              spec.f_stop = f_stop;
              spec.points = points;
              spec.spacing = spacing == "log" ? SweepSpec::Spacing::log : SweepSpec::Spacing::linear;
              SweepResult r = effective_resistance_sweep(net, spec, C, alpha);
              py::list out;
              for (const SweepPoint& p : r.points) {
                  py::dict d;
                  d["freq_hz"] = p.f_hz;
                  if (p.singular) {
                      d["status"] = "singular";
                  } else {
                      d["y"] = p.Y.value();
                      d["r_eff_ohm"] = p.lossless ? std::numeric_limits<double>::infinity() : p.r_eff;
                      d["t1_s"] = unwrap(p.t1);
                      d["status"] = "ok";
                  }
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("net"), py::arg("f_start"), py::arg("f_stop"), py::arg("points"),
          py::arg("spacing") = "linear", py::arg("C") = 10e-15, py::arg("alpha") = 1.0);
}
