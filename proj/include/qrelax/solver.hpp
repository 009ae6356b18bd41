#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qrelax/immittance.hpp"
#include "qrelax/netlist.hpp"

namespace qrelax {

// Dense complex nodal admittance matrix with the ground row/column removed.
// Row/column i corresponds to nodes[i]; nodes is sorted ascending.
struct AdmittanceMatrix {
    std::vector<NodeId> nodes;
    std::vector<std::complex<double>> a;  // row major, nodes.size()^2 entries

    std::size_t size() const { return nodes.size(); }
    std::complex<double>& at(std::size_t i, std::size_t j) { return a[i * size() + j]; }
    const std::complex<double>& at(std::size_t i, std::size_t j) const { return a[i * size() + j]; }

    // Index of a node id, or -1 when absent (in particular for ground).
    int index_of(NodeId node) const;
};

// AC admittance of one element at omega > 0:
//   resistor 1/R, capacitor i*omega*C, inductor -i/(omega*L).
// Inductors are stamped as admittances, which is why omega = 0 is rejected.
std::complex<double> element_admittance(const Element& e, double omega);

// Stamps every element; result is symmetric entry for entry. An empty netlist
// yields a 0x0 matrix (the failure then surfaces at solve time).
AdmittanceMatrix assemble_admittance_matrix(const Netlist& net, double omega);

// Solves Y*V = I for the given current injections (A) by dense LU with
// partial pivoting. Ground is fixed at 0 V and included in the result.
// Throws SingularNetwork when any pivot falls below 1e-14 times the largest
// entry of the assembled matrix.
std::map<NodeId, std::complex<double>> solve_node_voltages(
    const Netlist& net, const std::map<NodeId, std::complex<double>>& injections, double omega);

// Injects 1 A into port(+), pulls it from port(-), returns Y = 1/(V+ - V-)
// in siemens. A port voltage below 1e-300 V reports InfiniteAdmittance.
ComplexImmittance driving_point_admittance(const Netlist& net, double omega);

// Unit current drive across drive_port; returns the complex current through
// the labeled element, positive from n1 to n2.
std::complex<double> branch_current_from_drive(const Netlist& net,
                                               std::pair<NodeId, NodeId> drive_port,
                                               const std::string& branch_label, double omega);

}  // namespace qrelax
