#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "doctest.h"
#include "subprocess.hpp"

namespace {

const std::string cli = QRELAX_CLI_PATH;

std::string tmp_path(const std::string& stem) {
    return "/tmp/qrelax_test_" + std::to_string(getpid()) + "_" + stem;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream in(line);
    std::string tok;
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out = split(text, '\n');
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

// The CSV line whose first field is the given frequency.
std::vector<std::string> csv_row(const std::string& text, const std::string& freq) {
    for (const std::string& line : lines_of(text))
        if (line.rfind(freq + ",", 0) == 0) return split(line, ',');
    FAIL(("no row for frequency " + freq));
    return {};
}

const std::string bias_netlist =
    "# series bias path as seen by the qubit port\n"
    "Cc 1 3 10f\n"
    "Rz0 3 0 50\n"
    "Cg 2 0 10f\n"
    "PORT 1 2\n";

}  // namespace

TEST_CASE("version and help") {
    auto v = testutil::run(cli + " --version");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("qrelax 0.1.0") != std::string::npos);

    auto h = testutil::run(cli + " --help");
    CHECK(h.exit_code == 0);
    CHECK(h.output.find("cap") != std::string::npos);
    CHECK(h.output.find("sweep") != std::string::npos);

    CHECK(testutil::run(cli + " t1 --help").exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(testutil::run(cli + " 2>/dev/null").exit_code == 2);                      // no subcommand
    CHECK(testutil::run(cli + " t1 --bogus 2>/dev/null").exit_code == 2);           // unknown flag
    CHECK(testutil::run(cli + " t1 --model nosuch 2>/dev/null").exit_code == 2);    // bad choice
    CHECK(testutil::run(cli + " cap 2>/dev/null").exit_code == 2);                  // missing --D
    CHECK(testutil::run(cli + " cap --D 0 2>/dev/null").exit_code == 2);
    CHECK(testutil::run(cli + " cap --D 50u --eps-r 0.5 2>/dev/null").exit_code == 2);
    CHECK(testutil::run(cli + " t1 --C 5x 2>/dev/null").exit_code == 2);            // bad suffix
    CHECK(testutil::run(cli + " t1 --I0 1u --LJ -1.1n 2>/dev/null").exit_code == 2);
    CHECK(testutil::run(cli + " t1 --alpha 0.3 2>/dev/null").exit_code == 2);
    CHECK(testutil::run(cli + " sweep --points 1 2>/dev/null").exit_code == 2);
    CHECK(testutil::run(cli + " sweep --from 5G --to 1G 2>/dev/null").exit_code == 2);
    CHECK(testutil::run(cli + " sweep --format yaml 2>/dev/null").exit_code == 2);
    CHECK(testutil::run(cli + " sweep --netlist /no/such/file 2>/dev/null").exit_code == 2);
    CHECK(testutil::run(cli + " symmetry --epsilon -0.1 2>/dev/null").exit_code == 2);
}

TEST_CASE("computation errors exit with 1") {
    // a = 8D kills the loop logarithm after the flags themselves were fine.
    auto r = testutil::run(cli + " cap --D 50u --a 400u 2>&1");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("error") != std::string::npos);

    // Tap position outside the ladder surfaces from the model builder.
    CHECK(testutil::run(cli + " t1 --model symmetric --n 16 --k1 17 2>/dev/null").exit_code == 1);

    std::string bad = tmp_path("bad.net");
    write_file(bad, "R1 1 0 50\nC1 2 0 oops\nPORT 1 2\n");
    auto p = testutil::run(cli + " sweep --netlist " + bad + " 2>&1");
    CHECK(p.exit_code == 1);
    CHECK(p.output.find("line 2") != std::string::npos);
    std::remove(bad.c_str());
}

TEST_CASE("cap subcommand") {
    auto r = testutil::run(cli + " cap --D 50u --a 5u");
    REQUIRE(r.exit_code == 0);
    CHECK(testutil::value_after(r.output, "sphere") == doctest::Approx(2.7816251386e-15).epsilon(1e-8));
    CHECK(testutil::value_after(r.output, "disc") == doctest::Approx(1.7708375626e-15).epsilon(1e-8));
    CHECK(testutil::value_after(r.output, "loop, vacuum") == doctest::Approx(1.9942218131e-15).epsilon(1e-8));
    // eps_r defaults to 1: substrate equals vacuum.
    CHECK(testutil::value_after(r.output, "loop on substrate") ==
          doctest::Approx(1.9942218131e-15).epsilon(1e-8));
    CHECK(r.output.find("lower bounds") != std::string::npos);

    auto sub = testutil::run(cli + " cap --D 50u --a 5u --eps-r 10");
    REQUIRE(sub.exit_code == 0);
    CHECK(testutil::value_after(sub.output, "loop on substrate") ==
          doctest::Approx(1.0968219972e-14).epsilon(1e-8));

    // --a defaults to D/10.
    auto dflt = testutil::run(cli + " cap --D 50u");
    CHECK(dflt.output == r.output);

    auto thick = testutil::run(cli + " cap --D 50u --a 10u 2>&1");
    CHECK(thick.exit_code == 0);
    CHECK(thick.output.find("thin wire") != std::string::npos);
}

TEST_CASE("t1 on the lumped model") {
    auto r = testutil::run(cli + " t1 --model lumped");
    REQUIRE(r.exit_code == 0);
    CHECK(testutil::value_after(r.output, "Re{Y}") == doctest::Approx(1.23362445e-6).epsilon(1e-7));
    CHECK(testutil::value_after(r.output, "Reff") == doctest::Approx(8.10619469e5).epsilon(1e-7));
    // Loaded capacitance C + Ceff = 15 fF over Re{Y}.
    CHECK(testutil::value_after(r.output, "T1") == doctest::Approx(1.21592920e-8).epsilon(1e-7));
    CHECK(r.output.find("T2 <= 2*T1 = 2.43185841e-08") != std::string::npos);

    // --Ceff 5f is exactly the default Cg = Cc = 10f.
    auto ceff = testutil::run(cli + " t1 --model lumped --Ceff 5f");
    CHECK(ceff.exit_code == 0);
    CHECK(ceff.output == r.output);

    // Critical current instead of the Josephson inductance.
    CHECK(testutil::run(cli + " t1 --I0 0.329u").exit_code == 0);
}

TEST_CASE("t1 warnings") {
    auto a = testutil::run(cli + " t1 --alpha 5 2>&1");
    CHECK(a.exit_code == 0);
    CHECK(a.output.find("outside the typical range") != std::string::npos);

    auto x = testutil::run(cli + " t1 --freq 80G 2>&1");
    CHECK(x.exit_code == 0);
    CHECK(x.output.find(">= 0.1") != std::string::npos);
}

TEST_CASE("t1 on grounded and distributed models") {
    auto g = testutil::run(cli + " t1 --model grounded --Lg 1n");
    REQUIRE(g.exit_code == 0);
    CHECK(testutil::value_after(g.output, "Reff") == doctest::Approx(2.84355168e6).epsilon(1e-7));

    auto d = testutil::run(cli + " t1 --model distributed --n 64");
    REQUIRE(d.exit_code == 0);
    CHECK(testutil::value_after(d.output, "beta") == doctest::Approx(3.874780).epsilon(1e-5));
    double t1_dist = testutil::value_after(d.output, "T1");
    double t1_lumped = 1.21592920e-8;
    CHECK(t1_dist / t1_lumped == doctest::Approx(3.874780).epsilon(1e-5));
}

TEST_CASE("t1 on the center tap is lossless") {
    auto r = testutil::run(cli + " t1 --model center --n 16");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("Reff     : inf") != std::string::npos);
    CHECK(r.output.find("T1       : inf") != std::string::npos);
}

TEST_CASE("sweep CSV on the grounded model") {
    auto r = testutil::run(cli + " sweep --model grounded --Lg 1n --from 1G --to 10G --points 91");
    REQUIRE(r.exit_code == 0);
    std::vector<std::string> rows = lines_of(r.output);
    REQUIRE(rows.size() == 92);
    CHECK(rows[0] == "freq_hz,re_y_s,im_y_s,r_eff_ohm,t1_s");

    std::vector<std::string> row = csv_row(r.output, "5.00000000e+09");
    REQUIRE(row.size() == 5);
    CHECK(std::stod(row[1]) == doctest::Approx(3.51672877e-7).epsilon(1e-7));
    CHECK(std::stod(row[3]) == doctest::Approx(2.84355168e6).epsilon(1e-7));
    // T1 column is (C + Ceff)/Re{Y} for the builder models.
    CHECK(std::stod(row[4]) == doctest::Approx(15e-15 / std::stod(row[1])).epsilon(1e-7));
}

TEST_CASE("sweep from a netlist file uses the bare --C") {
    std::string path = tmp_path("bias.net");
    write_file(path, bias_netlist);

    auto file_run = testutil::run(cli + " sweep --netlist " + path +
                                  " --from 1G --to 10G --points 10 --C 10f");
    REQUIRE(file_run.exit_code == 0);
    auto model_run = testutil::run(cli + " sweep --model lumped --from 1G --to 10G --points 10");
    REQUIRE(model_run.exit_code == 0);

    std::vector<std::string> fl = lines_of(file_run.output);
    std::vector<std::string> ml = lines_of(model_run.output);
    REQUIRE(fl.size() == 11);
    REQUIRE(fl.size() == ml.size());
    for (std::size_t i = 1; i < fl.size(); ++i) {
        std::vector<std::string> a = split(fl[i], ',');
        std::vector<std::string> b = split(ml[i], ',');
        REQUIRE(a.size() == 5);
        REQUIRE(b.size() == 5);
        // Same environment, so the admittance columns agree byte for byte.
        for (int c = 0; c < 4; ++c) CHECK(a[c] == b[c]);
        // The netlist path divides by C alone, the builder by C + Ceff.
        CHECK(std::stod(b[4]) / std::stod(a[4]) == doctest::Approx(1.5).epsilon(1e-7));
    }
    std::remove(path.c_str());
}

TEST_CASE("sweep --out writes the same bytes as stdout") {
    std::string path = tmp_path("sweep.csv");
    auto to_stdout = testutil::run(cli + " sweep --model grounded --from 1G --to 5G --points 9");
    auto to_file = testutil::run(cli + " sweep --model grounded --from 1G --to 5G --points 9 --out " + path);
    REQUIRE(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == to_stdout.output);
    std::remove(path.c_str());
}

TEST_CASE("sweep output is identical across thread counts") {
    const std::string args = " sweep --model distributed --n 32 --from 5e8 --to 2e10"
                             " --points 64 --spacing log";
    auto one = testutil::run("QRELAX_THREADS=1 " + cli + args);
    auto four = testutil::run("QRELAX_THREADS=4 " + cli + args);
    auto many = testutil::run("QRELAX_THREADS=13 " + cli + args);
    REQUIRE(one.exit_code == 0);
    CHECK(four.output == one.output);
    CHECK(many.output == one.output);
}

TEST_CASE("sweep json") {
    auto r = testutil::run(cli + " sweep --model center --n 8 --from 1G --to 5G --points 5"
                                 " --format json");
    REQUIRE(r.exit_code == 0);
    std::vector<std::string> rows = lines_of(r.output);
    REQUIRE(rows.size() == 7);  // brackets plus one object per point
    CHECK(rows.front() == "[");
    CHECK(rows.back() == "]");
    CHECK(r.output.find("\"freq_hz\": 1.00000000e+09") != std::string::npos);
    // The center tap is lossless everywhere: tagged strings, not numbers.
    CHECK(r.output.find("\"r_eff_ohm\": \"inf\"") != std::string::npos);
    CHECK(r.output.find("\"t1_s\": \"inf\"") != std::string::npos);
}

TEST_CASE("sweep marks singular frequencies and keeps going") {
    std::string path = tmp_path("island.net");
    write_file(path, "R1 1 0 50\nC1 2 3 5f\nPORT 1 0\n");
    auto r = testutil::run(cli + " sweep --netlist " + path + " --from 1G --to 2G --points 3");
    REQUIRE(r.exit_code == 0);
    std::vector<std::string> rows = lines_of(r.output);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "freq_hz,re_y_s,im_y_s,r_eff_ohm,t1_s,status");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].find("nan,nan,nan,nan,singular") != std::string::npos);
    }
    std::remove(path.c_str());
}

TEST_CASE("sweep table format") {
    auto r = testutil::run(cli + " sweep --model lumped --from 1G --to 5G --points 5 --format table");
    REQUIRE(r.exit_code == 0);
    std::vector<std::string> rows = lines_of(r.output);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].find("freq_hz") == 0);
    CHECK(rows[0].find("t1_s") != std::string::npos);
}

TEST_CASE("symmetry subcommand") {
    auto r = testutil::run(cli + " symmetry --n 16");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("cc2=cc1*(1+eps)") != std::string::npos);

    // eps = 0 is the exact mirror null.
    bool saw_null = false;
    double prev_re = 0.0;
    int finite_rows = 0;
    for (const std::string& line : lines_of(r.output)) {
        std::istringstream in(line);
        double eps, re;
        std::string re_tok;
        if (!(in >> eps >> re_tok)) continue;
        try {
            re = std::stod(re_tok);
        } catch (...) {
            continue;
        }
        if (eps == 0.0) {
            saw_null = line.find("inf") != std::string::npos;
            continue;
        }
        // Larger asymmetry, more dissipation.
        CHECK(re > prev_re);
        prev_re = re;
        ++finite_rows;
    }
    CHECK(saw_null);
    CHECK(finite_rows == 3);

    auto custom = testutil::run(cli + " symmetry --n 16 --epsilon 0.05");
    CHECK(custom.exit_code == 0);
    CHECK(lines_of(custom.output).size() == 3);  // banner, header, one row
}
