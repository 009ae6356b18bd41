#include <random>
#include <string>

#include "doctest.h"
#include "qrelax/netlist.hpp"

using namespace qrelax;

TEST_CASE("single capacitor with port") {
    Netlist net = parse_netlist("C1 1 0 10f\nPORT 1 0\n");
    REQUIRE(net.elements.size() == 1);
    CHECK(net.elements[0].kind == ElementKind::capacitor);
    CHECK(net.elements[0].n1 == 1);
    CHECK(net.elements[0].n2 == 0);
    CHECK(net.elements[0].value == 10e-15);
    CHECK(net.elements[0].label == "C1");
    CHECK(net.port == std::pair<NodeId, NodeId>{1, 0});
    CHECK(net.node_count() == 2);
}

TEST_CASE("bias lead half: resistor plus coupling capacitor") {
    Netlist net = parse_netlist("R1 1 0 50\nCc 2 1 5f\nPORT 2 0\n");
    REQUIRE(net.elements.size() == 2);
    CHECK(net.elements[0].kind == ElementKind::resistor);
    CHECK(net.elements[0].value == 50.0);
    CHECK(net.elements[1].label == "Cc");
    CHECK(net.elements[1].value == 5e-15);
    CHECK(net.port == std::pair<NodeId, NodeId>{2, 0});
}

TEST_CASE("comments and blank lines are skipped, order is preserved") {
    Netlist net = parse_netlist("# environment\n\nR1 1 0 50\n# tap\nC1 2 1 5f\nPORT 2 0\n");
    REQUIRE(net.elements.size() == 2);
    CHECK(net.elements[0].label == "R1");
    CHECK(net.elements[1].label == "C1");
}

TEST_CASE("negative values are inductor-only") {
    Netlist net = parse_netlist("LJ 1 0 -1.1n\nPORT 1 0\n");
    CHECK(net.elements[0].value == -1.1e-9);
    CHECK_THROWS_AS(parse_netlist("R1 1 0 -50\nPORT 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_netlist("C1 1 0 -5f\nPORT 1 0\n"), ParseError);
}

TEST_CASE("parse errors carry the line number") {
    auto line_of = [](const std::string& text) {
        try {
            parse_netlist(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("X1 1 0 5\nPORT 1 0\n") == 1);              // unknown kind letter
    CHECK(line_of("R1 1 0 50\nC1 2 0 abc\nPORT 1 2\n") == 2); // malformed value
    CHECK(line_of("R1 1 0 50\nC1 2 0 5q\nPORT 1 2\n") == 2);  // unknown suffix
    CHECK(line_of("R1 1 0 50\n") == 1);                       // missing PORT
    CHECK(line_of("R1 1 0 50\nR1 2 0 50\nPORT 1 2\n") == 2);  // duplicate label
    CHECK(line_of("R1 1 0 50\nPORT 1 0\nPORT 1 0\n") == 3);   // duplicate PORT
    CHECK(line_of("R1 1 1 50\nPORT 1 0\n") == 1);             // self loop
    CHECK(line_of("R1 1 0 0\nPORT 1 0\n") == 1);              // zero value
    CHECK(line_of("R1 1 0 50\nPORT 1 1\n") == 2);             // degenerate port
    CHECK(line_of("R1 1 0 50\nPORT 1 7\n") == 2);             // port node unused
    CHECK(line_of("R1 x 0 50\nPORT 1 0\n") == 1);             // malformed node id
    CHECK(line_of("R1 -1 0 50\nPORT 1 0\n") == 1);            // negative node id
    CHECK(line_of("R1 1 0\nPORT 1 0\n") == 1);                // short element line
}

TEST_CASE("serialize then parse is the identity") {
    const char* text =
        "Lj 1 2 -1.1n\n"
        "Cj 1 2 10f\n"
        "L1 1 2 1n\n"
        "Cg1 2 0 10f\n"
        "Cc 1 3 10f\n"
        "Rz0 3 0 50\n"
        "PORT 1 2\n";
    Netlist net = parse_netlist(text);
    CHECK(serialize_netlist(net) == text);
    CHECK(parse_netlist(serialize_netlist(net)) == net);
}

TEST_CASE("round-trip identity on random netlists") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> n_elems(1, 12);
    std::uniform_int_distribution<int> node(0, 6);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_real_distribution<double> mag(1e-15, 1e4);

    for (int trial = 0; trial < 200; ++trial) {
        Netlist net;
        int m = n_elems(rng);
        for (int i = 0; i < m; ++i) {
            Element e;
            int k = kind(rng);
            e.kind = k == 0 ? ElementKind::resistor
                            : (k == 1 ? ElementKind::capacitor : ElementKind::inductor);
            e.n1 = node(rng);
            do { e.n2 = node(rng); } while (e.n2 == e.n1);
            e.value = mag(rng);
            if (e.kind == ElementKind::inductor && trial % 3 == 0) e.value = -e.value;
            e.label = std::string(1, kind_letter(e.kind)) + "x" + std::to_string(i);
            net.elements.push_back(e);
        }
        net.port = {net.elements[0].n1, net.elements[0].n2};
        if (net.port.first == net.port.second) continue;
        CAPTURE(serialize_netlist(net));
        CHECK(parse_netlist(serialize_netlist(net)) == net);
    }
}
