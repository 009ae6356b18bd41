#include "qrelax/netlist.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "qrelax/si_units.hpp"

namespace qrelax {

char kind_letter(ElementKind kind) {
    switch (kind) {
        case ElementKind::resistor: return 'R';
        case ElementKind::capacitor: return 'C';
        case ElementKind::inductor: return 'L';
    }
    return '?';
}

int Netlist::node_count() const {
    std::set<NodeId> nodes;
    for (const Element& e : elements) {
        nodes.insert(e.n1);
        nodes.insert(e.n2);
    }
    return static_cast<int>(nodes.size());
}

void Netlist::validate() const {
    std::set<std::string> labels;
    bool port1_seen = false, port2_seen = false;
    for (const Element& e : elements) {
        if (!std::isfinite(e.value) || e.value == 0.0)
            throw InvalidParameter("element '" + e.label + "': value must be finite and nonzero");
        if (e.value < 0.0 && e.kind != ElementKind::inductor)
            throw InvalidParameter("element '" + e.label + "': negative value only allowed for inductors");
        if (e.n1 == e.n2)
            throw InvalidParameter("element '" + e.label + "': connects a node to itself");
        if (e.n1 < 0 || e.n2 < 0)
            throw InvalidParameter("element '" + e.label + "': negative node id");
        if (e.label.empty() || e.label[0] != kind_letter(e.kind))
            throw InvalidParameter("element '" + e.label + "': label must start with its kind letter");
        if (!labels.insert(e.label).second)
            throw InvalidParameter("duplicate element label '" + e.label + "'");
        port1_seen = port1_seen || e.n1 == port.first || e.n2 == port.first;
        port2_seen = port2_seen || e.n1 == port.second || e.n2 == port.second;
    }
    if (port.first == port.second)
        throw InvalidParameter("port nodes must be distinct");
    if (port.first < 0 || port.second < 0)
        throw InvalidParameter("negative port node id");
    if (!port1_seen || !port2_seen)
        throw InvalidParameter("port node " +
                               std::to_string(port1_seen ? port.second : port.first) +
                               " does not appear in any element");
}

namespace {

bool parse_node(const std::string& tok, NodeId& out) {
    const char* begin = tok.data();
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && out >= 0;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

Netlist parse_netlist(std::string_view text) {
    Netlist net;
    std::set<std::string> labels;
    bool have_port = false;
    int port_line = 0;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                       : nl - pos));
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;

        std::vector<std::string> tokens = split_tokens(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;

        if (tokens[0] == "PORT") {
            if (have_port) throw ParseError(line_no, "duplicate PORT line");
            if (tokens.size() != 3) throw ParseError(line_no, "PORT wants two node ids");
            NodeId p1, p2;
            if (!parse_node(tokens[1], p1) || !parse_node(tokens[2], p2))
                throw ParseError(line_no, "malformed node id in PORT line");
            if (p1 == p2) throw ParseError(line_no, "port nodes must be distinct");
            net.port = {p1, p2};
            have_port = true;
            port_line = line_no;
            continue;
        }

        Element e;
        switch (tokens[0][0]) {
            case 'R': e.kind = ElementKind::resistor; break;
            case 'C': e.kind = ElementKind::capacitor; break;
            case 'L': e.kind = ElementKind::inductor; break;
            default:
                throw ParseError(line_no, "unknown element kind '" + std::string(1, tokens[0][0]) + "'");
        }
        if (tokens.size() != 4)
            throw ParseError(line_no, "malformed element line (want <K><label> <n1> <n2> <value>)");
        e.label = tokens[0];
        if (!labels.insert(e.label).second)
            throw ParseError(line_no, "duplicate label '" + e.label + "'");
        if (!parse_node(tokens[1], e.n1) || !parse_node(tokens[2], e.n2))
            throw ParseError(line_no, "malformed node id");
        if (e.n1 == e.n2) throw ParseError(line_no, "element connects a node to itself");
        try {
            e.value = parse_si(tokens[3]);
        } catch (const Error& err) {
            throw ParseError(line_no, err.what());
        }
        if (e.value == 0.0) throw ParseError(line_no, "element value must be nonzero");
        if (e.value < 0.0 && e.kind != ElementKind::inductor)
            throw ParseError(line_no, "negative value only allowed for inductors");
        net.elements.push_back(std::move(e));
    }

    if (!have_port) throw ParseError(line_no, "missing PORT line");

    try {
        net.validate();
    } catch (const Error& err) {
        throw ParseError(port_line, err.what());
    }
    return net;
}

std::string serialize_netlist(const Netlist& net) {
    std::string out;
    for (const Element& e : net.elements) {
        out += e.label;
        out += ' ';
        out += std::to_string(e.n1);
        out += ' ';
        out += std::to_string(e.n2);
        out += ' ';
        out += format_si(e.value);
        out += '\n';
    }
    out += "PORT " + std::to_string(net.port.first) + ' ' + std::to_string(net.port.second) + '\n';
    return out;
}

}  // namespace qrelax
