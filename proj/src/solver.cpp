#include "qrelax/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace qrelax {

int AdmittanceMatrix::index_of(NodeId node) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
    if (it == nodes.end() || *it != node) return -1;
    return static_cast<int>(it - nodes.begin());
}

std::complex<double> element_admittance(const Element& e, double omega) {
    if (omega <= 0.0)
        throw NonPositiveFrequency("element admittance needs omega > 0 (inductors have no DC admittance here)");
    switch (e.kind) {
        case ElementKind::resistor: return {1.0 / e.value, 0.0};
        case ElementKind::capacitor: return {0.0, omega * e.value};
        case ElementKind::inductor: return {0.0, -1.0 / (omega * e.value)};
    }
    throw InvalidParameter("unreachable element kind");
}

AdmittanceMatrix assemble_admittance_matrix(const Netlist& net, double omega) {
    if (omega <= 0.0) throw NonPositiveFrequency("assembly needs omega > 0");

    AdmittanceMatrix m;
    std::set<NodeId> nodes;
    for (const Element& e : net.elements) {
        if (e.n1 != 0) nodes.insert(e.n1);
        if (e.n2 != 0) nodes.insert(e.n2);
    }
    m.nodes.assign(nodes.begin(), nodes.end());
    m.a.assign(m.size() * m.size(), {0.0, 0.0});

    for (const Element& e : net.elements) {
        std::complex<double> y = element_admittance(e, omega);
        int i = e.n1 == 0 ? -1 : m.index_of(e.n1);
        int j = e.n2 == 0 ? -1 : m.index_of(e.n2);
        if (i >= 0) m.at(i, i) += y;
        if (j >= 0) m.at(j, j) += y;
        if (i >= 0 && j >= 0) {
            m.at(i, j) -= y;
            m.at(j, i) -= y;
        }
    }
    return m;
}

namespace {

// In-place LU with partial pivoting; b becomes the solution. The singularity
// test compares pivots against the largest entry of the matrix as assembled,
// not as eliminated, so cancellation-driven collapse is still caught.
void lu_solve(AdmittanceMatrix& m, std::vector<std::complex<double>>& b) {
    const std::size_t n = m.size();
    if (n == 0) throw SingularNetwork("empty system (no non-ground nodes)");

    double max_entry = 0.0;
    for (const std::complex<double>& v : m.a) max_entry = std::max(max_entry, std::abs(v));
    if (max_entry == 0.0) throw SingularNetwork("all-zero admittance matrix");
    const double floor = 1e-14 * max_entry;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(m.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            double mag = std::abs(m.at(i, k));
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (best < floor)
            throw SingularNetwork("singular admittance matrix (floating subnetwork or lossless resonance)");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            std::complex<double> factor = m.at(i, k) / m.at(k, k);
            if (factor == std::complex<double>(0.0, 0.0)) continue;
            m.at(i, k) = factor;
            for (std::size_t j = k + 1; j < n; ++j) m.at(i, j) -= factor * m.at(k, j);
            b[i] -= factor * b[k];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) b[i] -= m.at(i, j) * b[j];
        b[i] /= m.at(i, i);
    }
}

}  // namespace

std::map<NodeId, std::complex<double>> solve_node_voltages(
    const Netlist& net, const std::map<NodeId, std::complex<double>>& injections, double omega) {
    AdmittanceMatrix m = assemble_admittance_matrix(net, omega);
    std::vector<std::complex<double>> b(m.size(), {0.0, 0.0});
    for (const auto& [node, current] : injections) {
        if (node == 0) continue;  // current into the reference node needs no equation
        int idx = m.index_of(node);
        if (idx < 0) throw InvalidParameter("injection node " + std::to_string(node) + " is not in the netlist");
        b[idx] += current;
    }
    lu_solve(m, b);

    std::map<NodeId, std::complex<double>> v;
    v[0] = {0.0, 0.0};
    for (std::size_t i = 0; i < m.size(); ++i) v[m.nodes[i]] = b[i];
    return v;
}

ComplexImmittance driving_point_admittance(const Netlist& net, double omega) {
    net.validate();
    std::map<NodeId, std::complex<double>> injections;
    injections[net.port.first] += std::complex<double>(1.0, 0.0);
    injections[net.port.second] -= std::complex<double>(1.0, 0.0);
    auto v = solve_node_voltages(net, injections, omega);

    std::complex<double> vd = v.at(net.port.first) - v.at(net.port.second);
    if (std::abs(vd) < 1e-300)
        throw InfiniteAdmittance("port voltage magnitude below 1e-300 V");
    return ComplexImmittance::admittance(1.0 / vd);
}

std::complex<double> branch_current_from_drive(const Netlist& net,
                                               std::pair<NodeId, NodeId> drive_port,
                                               const std::string& branch_label, double omega) {
    const Element* branch = nullptr;
    for (const Element& e : net.elements)
        if (e.label == branch_label) {
            branch = &e;
            break;
        }
    if (!branch) throw UnknownElementLabel("no element labeled '" + branch_label + "'");
    if (drive_port.first == drive_port.second)
        throw InvalidParameter("drive port nodes must be distinct");

    std::map<NodeId, std::complex<double>> injections;
    injections[drive_port.first] += std::complex<double>(1.0, 0.0);
    injections[drive_port.second] -= std::complex<double>(1.0, 0.0);
    auto v = solve_node_voltages(net, injections, omega);

    auto at = [&](NodeId node) {
        auto it = v.find(node);
        if (it == v.end()) throw InvalidParameter("drive port node " + std::to_string(node) + " is not in the netlist");
        return it->second;
    };
    // Touch both drive nodes so a bad drive port fails loudly.
    at(drive_port.first);
    at(drive_port.second);
    return element_admittance(*branch, omega) * (at(branch->n1) - at(branch->n2));
}

}  // namespace qrelax
