#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrelax/errors.hpp"

namespace qrelax {

// Node ids are non-negative integers; id 0 is the global ground reference.
using NodeId = int;

enum class ElementKind { resistor, capacitor, inductor };

// Returns 'R', 'C' or 'L'.
char kind_letter(ElementKind kind);

struct Element {
    ElementKind kind;
    NodeId n1 = 0;
    NodeId n2 = 0;
    double value = 0.0;      // ohms, farads or henries
    std::string label;       // full token, first letter encodes the kind

    bool operator==(const Element&) const = default;
};

// A labeled linear RLC circuit with the two-terminal port the qubit looks
// out of. Immutable value type after construction; all operations on it are
// pure functions, safe to share across threads.
struct Netlist {
    std::vector<Element> elements;
    std::pair<NodeId, NodeId> port{0, 0};

    // Number of distinct node ids referenced (ground included when used).
    int node_count() const;

    // Enforces the structural invariants: finite nonzero values, negative
    // values only on inductors, no self-loops, unique labels, distinct port
    // nodes that appear in at least one element.
    void validate() const;

    bool operator==(const Netlist&) const = default;
};

// Text format, line oriented:
//   # comment
//   <K><label> <n1> <n2> <value>     K in {R,L,C}, value with optional SI suffix
//   PORT <n1> <n2>                   exactly once
// Throws ParseError with the offending 1-based line number.
Netlist parse_netlist(std::string_view text);

// Inverse of parse_netlist on the Netlist value (comments are not kept).
std::string serialize_netlist(const Netlist& net);

}  // namespace qrelax
