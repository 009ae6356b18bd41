#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrelax/capacitance.hpp"
#include "qrelax/constants.hpp"
#include "qrelax/models.hpp"
#include "qrelax/netlist.hpp"
#include "qrelax/relaxation.hpp"
#include "qrelax/si_units.hpp"
#include "qrelax/solver.hpp"

namespace {

using namespace qrelax;

// Flag problems found after CLI11 parsing still count as usage errors (exit 2).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

double flag_si(const std::string& name, const std::string& text) {
    try {
        return parse_si(text);
    } catch (const Error& e) {
        throw UsageError(name + ": " + e.what());
    }
}

std::string fmt8(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

// Loose engineering rendering for human-facing lines; CSV/JSON stay on fmt8.
std::string pretty(double v, const char* unit) {
    struct {
        double mult;
        const char* prefix;
    } static const scales[] = {{1e9, "G"}, {1e6, "M"}, {1e3, "k"}, {1.0, ""},
                               {1e-3, "m"}, {1e-6, "u"}, {1e-9, "n"}, {1e-12, "p"}, {1e-15, "f"}};
    double mag = std::fabs(v);
    for (const auto& s : scales)
        if (mag >= s.mult || (s.mult == 1e-15 && mag > 0)) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.4g %s%s", v / s.mult, s.prefix, unit);
            return buf;
        }
    return std::string("0 ") + unit;
}

struct QubitFlags {
    std::string C = "10f";
    std::string L = "1n";
    std::string LJ = "-1.1n";
    std::string I0;
    double alpha = 1.0;
};

struct EnvFlags {
    std::string Cg = "10f";
    std::string Cc = "10f";
    std::string Z0 = "50";
    std::string Lg;
    std::string Ceff;
    int n = 64;
    int tap = 0;
};

struct ModelFlags {
    std::string model = "lumped";
    std::string cc1, cc2;
    int k1 = -1, k2 = -1;
};

void add_qubit_flags(CLI::App* cmd, QubitFlags& q, CLI::Option*& lj_opt, CLI::Option*& i0_opt) {
    cmd->add_option("--C", q.C, "junction capacitance (F)")->capture_default_str();
    cmd->add_option("--L", q.L, "loop inductance (H)")->capture_default_str();
    lj_opt = cmd->add_option("--LJ", q.LJ, "Josephson inductance (H, negative at phase pi)")
                 ->capture_default_str();
    i0_opt = cmd->add_option("--I0", q.I0, "junction critical current (A); alternative to --LJ");
    cmd->add_option("--alpha", q.alpha, "anharmonicity factor, typical range [1,3]")
        ->capture_default_str();
}

void add_env_flags(CLI::App* cmd, EnvFlags& e) {
    cmd->add_option("--Cg", e.Cg, "capacitance to ground (F)")->capture_default_str();
    cmd->add_option("--Cc", e.Cc, "coupling capacitance to the bias lead (F)")->capture_default_str();
    cmd->add_option("--Z0", e.Z0, "bias lead resistance (ohm)")->capture_default_str();
    cmd->add_option("--Lg", e.Lg, "grounding inductance of the bias lead (H); omit for none");
    cmd->add_option("--Ceff", e.Ceff,
                    "effective series capacitance (F); shorthand that sets Cg = Cc = 2*Ceff");
    cmd->add_option("--n", e.n, "ladder segment count")->capture_default_str();
    cmd->add_option("--tap", e.tap, "Cc tap position on the ladder, 0..n")->capture_default_str();
}

QubitParams make_qubit(const QubitFlags& f, const CLI::Option* lj_opt, const CLI::Option* i0_opt) {
    double C = flag_si("--C", f.C);
    double L = flag_si("--L", f.L);
    if (i0_opt->count() > 0 && lj_opt->count() > 0)
        throw UsageError("give --I0 or --LJ, not both");
    try {
        QubitParams q = i0_opt->count() > 0
                            ? QubitParams::from_critical_current(C, L, flag_si("--I0", f.I0), f.alpha)
                            : QubitParams::from_josephson_inductance(C, L, flag_si("--LJ", f.LJ), f.alpha);
        if (!q.alpha_typical())
            std::cerr << "warning: alpha = " << f.alpha << " outside the typical range [1, 3]\n";
        return q;
    } catch (const InvalidParameter& e) {
        throw UsageError(e.what());
    } catch (const NonPositiveCapacitance& e) {
        throw UsageError(e.what());
    } catch (const NonPositiveInductance& e) {
        throw UsageError(e.what());
    } catch (const NonPositiveCurrent& e) {
        throw UsageError(e.what());
    }
}

CouplingEnvironment make_env(const EnvFlags& f) {
    CouplingEnvironment env;
    if (!f.Ceff.empty()) {
        double ceff = flag_si("--Ceff", f.Ceff);
        if (ceff <= 0.0) throw UsageError("--Ceff must be positive");
        env.Cg = env.Cc = 2.0 * ceff;
    } else {
        env.Cg = flag_si("--Cg", f.Cg);
        env.Cc = flag_si("--Cc", f.Cc);
    }
    env.Z0 = flag_si("--Z0", f.Z0);
    if (!f.Lg.empty()) env.Lg = flag_si("--Lg", f.Lg);
    env.n = f.n;
    env.tap_index = f.tap;
    try {
        env.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return env;
}

Netlist build_model(const std::string& model, const QubitParams& q, const CouplingEnvironment& env,
                    const ModelFlags& m) {
    if (model == "lumped") return build_lumped_model(q, env);
    if (model == "distributed") return build_distributed_model(q, env);
    if (model == "symmetric") {
        double cc1 = m.cc1.empty() ? env.Cc / 2.0 : flag_si("--cc1", m.cc1);
        double cc2 = m.cc2.empty() ? env.Cc / 2.0 : flag_si("--cc2", m.cc2);
        return build_symmetric_single_lead(q, env, cc1, cc2, m.k1, m.k2);
    }
    if (model == "center") return build_center_tap(q, env);
    if (model == "grounded") return build_grounded_bias(q, env);
    throw UsageError("unknown model '" + model + "'");
}

// ---- cap ----

struct CapConfig {
    std::string D;
    std::string a;
    double eps_r = 1.0;
};

int run_cap(const CapConfig& cfg) {
    double D = flag_si("--D", cfg.D);
    if (D <= 0.0) throw UsageError("--D must be positive");
    double a = cfg.a.empty() ? D / 10.0 : flag_si("--a", cfg.a);
    if (a <= 0.0) throw UsageError("--a must be positive");
    if (cfg.eps_r < 1.0) throw UsageError("--eps-r must be at least 1");

    LoopGeometry g(D, a, cfg.eps_r * constants::eps0);
    if (!g.thin_wire())
        std::cerr << "warning: D/a < 10; the loop formulas assume a thin wire\n";

    std::printf("sphere (diameter D)        : %s F  (%s)\n", fmt8(sphere_capacitance(D)).c_str(),
                pretty(sphere_capacitance(D), "F").c_str());
    std::printf("disc (diameter D)          : %s F  (%s)\n", fmt8(disc_capacitance(D)).c_str(),
                pretty(disc_capacitance(D), "F").c_str());
    std::printf("loop, vacuum               : %s F  (%s)\n", fmt8(toroid_capacitance(g)).c_str(),
                pretty(toroid_capacitance(g), "F").c_str());
    std::printf("loop on substrate (eps_r=%g): %s F  (%s)\n", cfg.eps_r,
                fmt8(toroid_on_substrate(g)).c_str(), pretty(toroid_on_substrate(g), "F").c_str());
    std::printf("note: ground is taken at infinity, so these are lower bounds on the\n"
                "      capacitance to a nearby ground plane.\n");
    return 0;
}

// ---- t1 ----

struct T1Config {
    QubitFlags q;
    EnvFlags e;
    ModelFlags m;
    std::string freq = "5G";
    CLI::Option* lj_opt = nullptr;
    CLI::Option* i0_opt = nullptr;
};

int run_t1(const T1Config& cfg) {
    QubitParams q = make_qubit(cfg.q, cfg.lj_opt, cfg.i0_opt);
    CouplingEnvironment env = make_env(cfg.e);
    double f = flag_si("--freq", cfg.freq);
    if (f <= 0.0) throw UsageError("--freq must be positive");
    double omega = 2.0 * constants::pi * f;

    Netlist circuit = build_model(cfg.m.model, q, env, cfg.m);
    ComplexImmittance Y = driving_point_admittance(environment_of(circuit), omega);

    double Ceff = series_effective_capacitance(env.Cg, env.Cc);
    double x = omega * Ceff * env.Z0;
    if (x >= 0.1)
        std::cerr << "warning: omega*Ceff*Z0 = " << x
                  << " >= 0.1; closed-form estimates lose accuracy, exact network values below\n";

    std::printf("model    : %s\n", cfg.m.model.c_str());
    std::printf("f        : %s Hz  (%s)\n", fmt8(f).c_str(), pretty(f, "Hz").c_str());
    std::printf("Re{Y}    : %s S\n", fmt8(Y.re).c_str());
    std::printf("Im{Y}    : %s S\n", fmt8(Y.im).c_str());

    bool lossless = numerically_lossless(Y) || Y.re <= 1e-30;
    if (lossless) {
        std::printf("Reff     : inf\n");
        std::printf("T1       : inf  (numerically lossless: |Re{Y}| <= 1e-12*|Im{Y}|)\n");
        std::printf("T2 bound : T2 <= 2*T1 = inf\n");
        return 0;
    }

    // Loaded-capacitance convention: the environment raises the resonator
    // capacitance from C to C + Ceff, and T1 = alpha*(C+Ceff)/Re{Y}.
    RelaxationTime t1 = t1_classical(q.C + Ceff, Y, q.alpha);
    std::printf("Reff     : %s ohm  (%s)\n", fmt8(1.0 / Y.re).c_str(), pretty(1.0 / Y.re, "ohm").c_str());
    std::printf("T1       : %s s  (%s)\n", t1.str().c_str(), pretty(t1.seconds, "s").c_str());
    std::printf("T2 bound : T2 <= 2*T1 = %s s\n", fmt8(2.0 * t1.seconds).c_str());

    if (cfg.m.model == "distributed") {
        ComplexImmittance y_lumped = driving_point_admittance(environment_of(build_lumped_model(q, env)), omega);
        if (!numerically_lossless(y_lumped) && y_lumped.re > 1e-30) {
            RelaxationTime t1_lumped = t1_classical(q.C + Ceff, y_lumped, q.alpha);
            std::printf("beta     : %.6f  (lumped T1 = %s s)\n", Y.re > 0 ? y_lumped.re / Y.re : 0.0,
                        t1_lumped.str().c_str());
        }
    }
    return 0;
}

// ---- sweep ----

struct SweepConfig {
    QubitFlags q;
    EnvFlags e;
    ModelFlags m;
    std::string netlist_path;
    std::string from = "1G";
    std::string to = "10G";
    int points = 201;
    std::string spacing = "linear";
    std::string format = "csv";
    std::string out;
    CLI::Option* lj_opt = nullptr;
    CLI::Option* i0_opt = nullptr;
};

void write_csv(const SweepResult& r, std::ostream& os) {
    bool status = r.any_singular();
    os << "freq_hz,re_y_s,im_y_s,r_eff_ohm,t1_s" << (status ? ",status" : "") << "\n";
    for (const SweepPoint& p : r.points) {
        if (p.singular) {
            os << fmt8(p.f_hz) << ",nan,nan,nan,nan";
        } else {
            os << fmt8(p.f_hz) << ',' << fmt8(p.Y.re) << ',' << fmt8(p.Y.im) << ','
               << (p.lossless ? "inf" : fmt8(p.r_eff)) << ',' << p.t1.str();
        }
        if (status) os << ',' << (p.singular ? "singular" : "ok");
        os << "\n";
    }
}

void write_json(const SweepResult& r, std::ostream& os) {
    bool status = r.any_singular();
    os << "[\n";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const SweepPoint& p = r.points[i];
        os << "  {\"freq_hz\": " << fmt8(p.f_hz);
        if (p.singular) {
            os << ", \"re_y_s\": \"nan\", \"im_y_s\": \"nan\", \"r_eff_ohm\": \"nan\", \"t1_s\": \"nan\"";
        } else {
            os << ", \"re_y_s\": " << fmt8(p.Y.re) << ", \"im_y_s\": " << fmt8(p.Y.im);
            if (p.lossless)
                os << ", \"r_eff_ohm\": \"inf\", \"t1_s\": \"inf\"";
            else
                os << ", \"r_eff_ohm\": " << fmt8(p.r_eff) << ", \"t1_s\": " << p.t1.str();
        }
        if (status) os << ", \"status\": \"" << (p.singular ? "singular" : "ok") << "\"";
        os << "}" << (i + 1 < r.points.size() ? "," : "") << "\n";
    }
    os << "]\n";
}

void write_table(const SweepResult& r, std::ostream& os) {
    os << "freq_hz          re_y_s           im_y_s           r_eff_ohm        t1_s\n";
    for (const SweepPoint& p : r.points) {
        if (p.singular) {
            os << fmt8(p.f_hz) << "   (singular at this frequency)\n";
            continue;
        }
        os << fmt8(p.f_hz) << "   " << fmt8(p.Y.re) << "   " << fmt8(p.Y.im) << "   "
           << (p.lossless ? "inf          " : fmt8(p.r_eff)) << "   " << p.t1.str() << "\n";
    }
}

int run_sweep(const SweepConfig& cfg) {
    SweepSpec spec;
    spec.f_start = flag_si("--from", cfg.from);
    spec.f_stop = flag_si("--to", cfg.to);
    spec.points = cfg.points;
    spec.spacing = cfg.spacing == "log" ? SweepSpec::Spacing::log : SweepSpec::Spacing::linear;
    try {
        spec.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }

    Netlist net;
    double C_for_t1;
    double alpha;
    if (!cfg.netlist_path.empty()) {
        std::ifstream in(cfg.netlist_path);
        if (!in) throw UsageError("cannot open netlist file '" + cfg.netlist_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        net = parse_netlist(buf.str());  // used as given: the file is the environment
        C_for_t1 = flag_si("--C", cfg.q.C);
        alpha = cfg.q.alpha;
        if (!(alpha >= 0.5 && alpha <= 10.0)) throw UsageError("--alpha outside the hard limits [0.5, 10]");
    } else {
        QubitParams q = make_qubit(cfg.q, cfg.lj_opt, cfg.i0_opt);
        CouplingEnvironment env = make_env(cfg.e);
        net = environment_of(build_model(cfg.m.model, q, env, cfg.m));
        C_for_t1 = q.C + series_effective_capacitance(env.Cg, env.Cc);
        alpha = q.alpha;
    }

    SweepResult result = effective_resistance_sweep(net, spec, C_for_t1, alpha);

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::binary);
        if (!file) throw UsageError("cannot open output file '" + cfg.out + "'");
    }
    std::ostream& os = cfg.out.empty() ? std::cout : file;
    if (cfg.format == "csv")
        write_csv(result, os);
    else if (cfg.format == "json")
        write_json(result, os);
    else if (cfg.format == "table")
        write_table(result, os);
    else
        throw UsageError("unknown format '" + cfg.format + "'");
    return 0;
}

// ---- symmetry ----

struct SymmetryConfig {
    QubitFlags q;
    EnvFlags e;
    std::string freq = "5G";
    std::vector<double> epsilons;
    CLI::Option* lj_opt = nullptr;
    CLI::Option* i0_opt = nullptr;
};

int run_symmetry(const SymmetryConfig& cfg) {
    QubitParams q = make_qubit(cfg.q, cfg.lj_opt, cfg.i0_opt);
    CouplingEnvironment env = make_env(cfg.e);
    double f = flag_si("--freq", cfg.freq);
    if (f <= 0.0) throw UsageError("--freq must be positive");
    double omega = 2.0 * constants::pi * f;

    std::vector<double> eps = cfg.epsilons;
    if (eps.empty()) eps = {0.0, 1e-3, 1e-2, 1e-1};

    double cc1 = env.Cc / 2.0;
    std::printf("symmetric single-lead ladder, n=%d, cc1=%s F, cc2=cc1*(1+eps), f=%s\n", env.n,
                fmt8(cc1).c_str(), pretty(f, "Hz").c_str());
    std::printf("%-10s %-16s %-16s %-16s %s\n", "eps", "Re{Y} (S)", "Im{Y} (S)", "Reff (ohm)", "T1 (s)");
    for (double e : eps) {
        if (e < 0.0) throw UsageError("--epsilon values must be non-negative");
        double cc2 = cc1 * (1.0 + e);
        Netlist net = environment_of(build_symmetric_single_lead(q, env, cc1, cc2));
        ComplexImmittance Y = driving_point_admittance(net, omega);
        bool lossless = numerically_lossless(Y) || Y.re <= 1e-30;
        std::string reff = lossless ? "inf" : fmt8(1.0 / Y.re);
        std::string t1;
        if (lossless) {
            t1 = "inf";
        } else {
            double Ceff = series_effective_capacitance(env.Cg, cc1 + cc2);
            t1 = t1_classical(q.C + Ceff, Y, q.alpha).str();
        }
        std::printf("%-10g %-16s %-16s %-16s %s\n", e, fmt8(Y.re).c_str(), fmt8(Y.im).c_str(),
                    reff.c_str(), t1.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qrelax: T1 relaxation estimates for capacitively biased superconducting qubits"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qrelax 0.1.0");

    CapConfig cap_cfg;
    CLI::App* cap = app.add_subcommand("cap", "closed-form capacitance-to-ground estimates");
    cap->add_option("--D", cap_cfg.D, "loop/sphere/disc diameter (m)")->required();
    cap->add_option("--a", cap_cfg.a, "wire width (m); default D/10");
    cap->add_option("--eps-r", cap_cfg.eps_r, "relative substrate permittivity")->capture_default_str();

    T1Config t1_cfg;
    CLI::App* t1 = app.add_subcommand("t1", "T1 of one topology at one frequency");
    t1->add_option("--model", t1_cfg.m.model, "lumped|distributed|symmetric|center|grounded")
        ->check(CLI::IsMember({"lumped", "distributed", "symmetric", "center", "grounded"}))
        ->capture_default_str();
    add_qubit_flags(t1, t1_cfg.q, t1_cfg.lj_opt, t1_cfg.i0_opt);
    add_env_flags(t1, t1_cfg.e);
    t1->add_option("--freq", t1_cfg.freq, "drive/qubit frequency (Hz)")->capture_default_str();
    t1->add_option("--cc1", t1_cfg.m.cc1, "symmetric model: first tap capacitance (default Cc/2)");
    t1->add_option("--cc2", t1_cfg.m.cc2, "symmetric model: second tap capacitance (default Cc/2)");
    t1->add_option("--k1", t1_cfg.m.k1, "symmetric model: first tap position (default n/4)");
    t1->add_option("--k2", t1_cfg.m.k2, "symmetric model: second tap position (default n-k1)");

    SweepConfig sweep_cfg;
    CLI::App* sweep = app.add_subcommand("sweep", "effective resistance over a frequency grid");
    sweep->add_option("--netlist", sweep_cfg.netlist_path, "environment netlist file (overrides --model)");
    sweep->add_option("--model", sweep_cfg.m.model, "lumped|distributed|symmetric|center|grounded")
        ->check(CLI::IsMember({"lumped", "distributed", "symmetric", "center", "grounded"}))
        ->capture_default_str();
    add_qubit_flags(sweep, sweep_cfg.q, sweep_cfg.lj_opt, sweep_cfg.i0_opt);
    add_env_flags(sweep, sweep_cfg.e);
    sweep->add_option("--cc1", sweep_cfg.m.cc1, "symmetric model: first tap capacitance");
    sweep->add_option("--cc2", sweep_cfg.m.cc2, "symmetric model: second tap capacitance");
    sweep->add_option("--k1", sweep_cfg.m.k1, "symmetric model: first tap position");
    sweep->add_option("--k2", sweep_cfg.m.k2, "symmetric model: second tap position");
    sweep->add_option("--from", sweep_cfg.from, "start frequency (Hz)")->capture_default_str();
    sweep->add_option("--to", sweep_cfg.to, "stop frequency (Hz)")->capture_default_str();
    sweep->add_option("--points", sweep_cfg.points, "grid size")->capture_default_str();
    sweep->add_option("--spacing", sweep_cfg.spacing, "linear|log")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
    sweep->add_option("--format", sweep_cfg.format, "csv|json|table")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
    sweep->add_option("--out", sweep_cfg.out, "output file (default stdout)");

    SymmetryConfig sym_cfg;
    CLI::App* symmetry = app.add_subcommand("symmetry", "symmetry null and its breaking");
    add_qubit_flags(symmetry, sym_cfg.q, sym_cfg.lj_opt, sym_cfg.i0_opt);
    add_env_flags(symmetry, sym_cfg.e);
    symmetry->add_option("--freq", sym_cfg.freq, "drive frequency (Hz)")->capture_default_str();
    symmetry->add_option("--epsilon", sym_cfg.epsilons,
                         "cc2/cc1 - 1 values (default 0 1e-3 1e-2 1e-1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*cap) return run_cap(cap_cfg);
        if (*t1) return run_t1(t1_cfg);
        if (*sweep) return run_sweep(sweep_cfg);
        if (*symmetry) return run_symmetry(sym_cfg);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
