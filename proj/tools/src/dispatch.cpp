#include "wgqed_cli/dispatch.hpp"

#include "commands.hpp"
#include "output.hpp"

#include <wgqed/errors.hpp>
#include <wgqed/general_solution.hpp>
#include <wgqed/observables.hpp>
#include <wgqed/oracle.hpp>
#include <wgqed/params.hpp>
#include <wgqed/pulse.hpp>

#include <CLI11.hpp>

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace wgqed::cli {

namespace {

bool use_color() {
    return std::getenv("NO_COLOR") == nullptr && ::isatty(STDERR_FILENO) == 1;
}

void diagnostic(const char *level, const char *color, std::string_view msg) {
    if (use_color()) {
        std::cerr << color << level << "\x1b[0m: " << msg << '\n';
    } else {
        std::cerr << level << ": " << msg << '\n';
    }
}

void warn(std::string_view msg) { diagnostic("warning", "\x1b[33m", msg); }

struct Options {
    double omega1 = 1.0;
    double gamma2_over_omega1 = 0.02;
    double ratio = 1.5;
    double alpha_r = -0.03;
    std::string out;
    bool svg = false;
    double wmin = 0.95;
    double wmax = 1.02;
    std::optional<std::size_t> n;
    std::size_t modes = 801;
    std::optional<double> half_width;
    std::optional<double> dt;
    std::optional<double> t_max;
    std::optional<std::size_t> steps;
    std::size_t stride = 50;
    std::string figure;
    // pulse
    std::string shape = "gaussian";
    double center = -3.0;
    double width = 0.5;
    double left = -2.0;
    double right = -1.0;
    std::optional<double> carrier;
    std::string samples;
    double weight = 1.0;
    double alpha0 = 0.0;
};

SystemParams params_from(const Options &o) {
    return make_params(o.omega1, o.alpha_r, o.gamma2_over_omega1 * o.omega1, o.ratio, 1.0, warn);
}

void describe(RunManifest &m, const Options &o) {
    m.set("omega1", o.omega1);
    m.set("alpha_r", o.alpha_r);
    m.set("gamma2_over_omega1", o.gamma2_over_omega1);
    m.set("ratio_gamma2_gamma1", o.ratio);
}

// Writes the table to --out (with a sibling manifest) or to stdout.
void emit(const Options &o, RunManifest &m, const Table &t,
          const std::chrono::steady_clock::time_point start) {
    if (o.out.empty()) {
        write_csv(std::cout, m, t);
        return;
    }
    m.outputs.push_back(o.out);
    write_csv(o.out, m, t);
    m.duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_text(manifest_path(o.out), m.to_json());
}

std::filesystem::path svg_path(const Options &o) {
    if (o.out.empty()) throw ValidationError("--svg needs --out");
    std::filesystem::path p = o.out;
    p.replace_extension(".svg");
    return p;
}

int run_probabilities(const Options &o, std::chrono::steady_clock::time_point start) {
    const auto p = params_from(o);
    const double t_max = o.t_max.value_or(8.0);
    const std::size_t steps = o.steps.value_or(400);
    RunManifest m{"probabilities", {}, {}, 0.0};
    describe(m, o);
    m.set("t_max_gamma2", t_max);
    m.set("steps", static_cast<double>(steps));
    const auto t = probabilities_table(p, t_max, steps);
    if (o.svg) {
        std::vector<double> x;
        std::vector<Series> s{{"P_f0", {}}, {"P_e1", {}}, {"P_g2", {}}};
        for (const auto &r : t.rows) {
            x.push_back(r[0]);
            for (int c = 0; c < 3; ++c) s[c].y.push_back(r[c + 1]);
        }
        const auto path = svg_path(o);
        write_line_svg(path, "State probabilities", "Gamma2 t", "probability", x, s);
        m.outputs.push_back(path.string());
    }
    emit(o, m, t, start);
    return exit_ok;
}

int run_spectrum(const Options &o, std::chrono::steady_clock::time_point start) {
    const auto p = params_from(o);
    const std::size_t n = o.n.value_or(201);
    RunManifest m{"spectrum", {}, {}, 0.0};
    describe(m, o);
    m.set("wmin", o.wmin);
    m.set("wmax", o.wmax);
    m.set("n", static_cast<double>(n));
    const FrequencyRange r{o.wmin * o.omega1, o.wmax * o.omega1};
    const auto g = spectrum_grid(r, r, n, n, p);
    if (o.svg) {
        std::vector<double> v(n * n);
        std::vector<double> ax(n);
        for (std::size_t i = 0; i < n; ++i) {
            ax[i] = g.axis1[i] / o.omega1;
            for (std::size_t j = 0; j < n; ++j) v[j * n + i] = g.at(i, j) * p.gamma2() * p.gamma2();
        }
        const auto path = svg_path(o);
        write_heatmap_svg(path, "S(omega1, omega2) Gamma2^2", "omega1 / Omega1", "omega2 / Omega1",
                          ax, ax, v);
        m.outputs.push_back(path.string());
    }
    emit(o, m, spectrum_table(g), start);
    return exit_ok;
}

int run_identical(const Options &o, std::chrono::steady_clock::time_point start) {
    const auto p = params_from(o);
    const std::size_t n = o.n.value_or(701);
    RunManifest m{"identical", {}, {}, 0.0};
    describe(m, o);
    m.set("wmin", o.wmin);
    m.set("wmax", o.wmax);
    m.set("n", static_cast<double>(n));
    const auto t = identical_table(p, o.wmin, o.wmax, n);
    if (o.svg) {
        std::vector<double> x;
        std::vector<Series> s{{"S Gamma2^2", {}}};
        for (const auto &r : t.rows) {
            x.push_back(r[0]);
            s[0].y.push_back(r[2]);
        }
        const auto path = svg_path(o);
        write_line_svg(path, "Identical-photon spectrum", "omega / Omega1", "S Gamma2^2", x, s);
        m.outputs.push_back(path.string());
    }
    emit(o, m, t, start);
    return exit_ok;
}

int run_figure(const Options &o, std::chrono::steady_clock::time_point start) {
    auto f = make_figure(o.figure, o.n.value_or(o.steps.value_or(0)));
    if (o.svg) {
        const auto path = svg_path(o);
        if (f.heatmap) {
            write_heatmap_svg(path, f.title, f.xlabel, f.ylabel, f.x, f.y, f.values);
        } else {
            write_line_svg(path, f.title, f.xlabel, f.ylabel, f.x, f.series);
        }
        f.manifest.outputs.push_back(path.string());
    }
    emit(o, f.manifest, f.table, start);
    return exit_ok;
}

int run_verify(const Options &o, std::chrono::steady_clock::time_point start) {
    const auto p = params_from(o);
    OracleConfig cfg;
    cfg.n_modes = o.modes;
    cfg.t_max = o.t_max.value_or(6.0) / p.gamma2();
    if (o.half_width) cfg.half_width = *o.half_width * p.omega1();
    if (o.dt) cfg.dt = *o.dt / p.gamma2();
    cfg.stride = o.stride;
    const auto rep = compare_with_analytic(p, cfg);
    const std::string json = rep.to_json() + "\n";
    if (o.out.empty()) {
        std::cout << json;
    } else {
        write_text(o.out, json);
        RunManifest m{"verify", {}, {o.out}, 0.0};
        describe(m, o);
        m.set("modes", static_cast<double>(o.modes));
        m.set("t_max_gamma2", o.t_max.value_or(6.0));
        m.set("dt", rep.dt);
        m.set("half_width", rep.half_width);
        m.duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_text(manifest_path(o.out), m.to_json());
    }
    std::ostringstream os;
    os << "verify: " << (rep.pass ? "pass" : "FAIL");
    for (const auto &ob : rep.observables) {
        if (!ob.pass) os << ' ' << ob.observable;
    }
    if (rep.pass) {
        std::cerr << os.str() << '\n';
    } else {
        warn(os.str());
    }
    return exit_ok;
}

PulseSpec read_samples(const std::string &path, double length_unit, double weight) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot read samples file " + path);
    std::vector<double> x;
    std::vector<cplx> v;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        double xi = 0, re = 0, im = 0;
        char c1 = 0, c2 = 0;
        if (!(ls >> xi >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',') {
            // Header row or malformed line.
            if (x.empty() && v.empty() && line.find_first_of("0123456789") == std::string::npos) continue;
            throw ValidationError("malformed samples line: " + line);
        }
        // Amplitudes are given per sqrt(v_g / Gamma2).
        x.push_back(xi * length_unit);
        v.push_back(cplx(re, im) / std::sqrt(length_unit));
    }
    if (weight > 0.0) return PulseSpec::sampled(std::move(x), std::move(v), weight);
    return PulseSpec::sampled(std::move(x), std::move(v));
}

int run_pulse(const Options &o, std::chrono::steady_clock::time_point start) {
    const auto p = params_from(o);
    const double len = p.v_g() / p.gamma2();
    const double carrier = o.carrier.value_or(p.delta_omega() / p.omega1()) * p.omega1() / p.v_g();
    PulseSpec pulse;
    if (o.shape == "gaussian") {
        pulse = PulseSpec::gaussian(o.center * len, o.width * len, carrier, o.weight);
    } else if (o.shape == "rectangular") {
        pulse = PulseSpec::rectangular(o.left * len, o.right * len, carrier, o.weight);
    } else if (o.shape == "sampled") {
        if (o.samples.empty()) throw ValidationError("--pulse-shape sampled needs --samples");
        pulse = read_samples(o.samples, len, 0.0);
    } else if (o.shape == "none") {
        pulse = PulseSpec::none();
    } else {
        throw ValidationError("unknown --pulse-shape '" + o.shape + "'");
    }
    const GeneralSolution sol(p, o.alpha0, pulse);
    const double t_max = o.t_max.value_or(8.0);
    const std::size_t steps = o.steps.value_or(400);
    if (!(t_max > 0.0) || steps < 1) throw ValidationError("--t-max and --steps must be positive");

    RunManifest m{"pulse", {}, {}, 0.0};
    describe(m, o);
    m.set("pulse_shape", o.shape);
    if (o.shape == "gaussian") {
        m.set("center", o.center);
        m.set("width", o.width);
    } else if (o.shape == "rectangular") {
        m.set("left", o.left);
        m.set("right", o.right);
    } else if (o.shape == "sampled") {
        m.set("samples", o.samples);
    }
    m.set("carrier", carrier * p.v_g() / p.omega1());
    m.set("weight", pulse.weight());
    m.set("alpha0", o.alpha0);
    m.set("t_max_gamma2", t_max);
    m.set("steps", static_cast<double>(steps));

    Table t{{"t_gamma2", "alpha_re", "alpha_im", "p_f0"}, {}};
    for (std::size_t i = 0; i <= steps; ++i) {
        const double tg = t_max * static_cast<double>(i) / static_cast<double>(steps);
        const cplx a = sol.alpha(tg / p.gamma2());
        t.rows.push_back({tg, a.real(), a.imag(), std::norm(a)});
    }
    if (o.svg) {
        std::vector<double> x;
        std::vector<Series> s{{"|alpha|^2", {}}};
        for (const auto &r : t.rows) {
            x.push_back(r[0]);
            s[0].y.push_back(r[3]);
        }
        const auto path = svg_path(o);
        write_line_svg(path, "Upper-state population", "Gamma2 t", "|alpha|^2", x, s);
        m.outputs.push_back(path.string());
    }
    emit(o, m, t, start);
    return exit_ok;
}

} // namespace

int dispatch(int argc, const char *const *argv) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Two-photon cascade emission from a three-level ladder emitter in a chiral waveguide",
                 "wgqed"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.set_config("--config", "", "Flat key=value file; keys are flag names, flags override it");
    app.add_option("--omega1", o.omega1, "Lower transition frequency Omega1")->capture_default_str();
    app.add_option("--gamma2-over-omega1", o.gamma2_over_omega1, "Upper-level decay rate in units of Omega1")
        ->capture_default_str();
    app.add_option("--ratio", o.ratio, "Decay-rate ratio Gamma2/Gamma1")->capture_default_str();
    app.add_option("--alpha-r", o.alpha_r, "Relative anharmonicity")->capture_default_str();
    app.add_option("--out", o.out, "Output file (stdout if omitted)");
    app.add_flag("--svg", o.svg, "Also write an SVG rendering next to --out");
    app.add_option("--wmin", o.wmin, "Grid start, units of Omega1")->capture_default_str();
    app.add_option("--wmax", o.wmax, "Grid end, units of Omega1")->capture_default_str();
    app.add_option("--n", o.n, "Grid points per axis");
    app.add_option("--modes", o.modes, "Oracle mode count (odd, >= 101)")->capture_default_str();
    app.add_option("--half-width", o.half_width, "Oracle window half-width, units of Omega1");
    app.add_option("--dt", o.dt, "Oracle time step, units of 1/Gamma2");
    app.add_option("--t-max", o.t_max, "Final time, units of 1/Gamma2");
    app.add_option("--steps", o.steps, "Number of time intervals");
    app.add_option("--stride", o.stride, "Oracle snapshot stride")->capture_default_str();
    app.add_option("--pulse-shape", o.shape, "gaussian, rectangular, sampled or none")->capture_default_str();
    app.add_option("--center", o.center, "Gaussian centre, units of v_g/Gamma2")->capture_default_str();
    app.add_option("--width", o.width, "Gaussian sigma of |beta0|^2, units of v_g/Gamma2")->capture_default_str();
    app.add_option("--left", o.left, "Rectangular left edge, units of v_g/Gamma2")->capture_default_str();
    app.add_option("--right", o.right, "Rectangular right edge, units of v_g/Gamma2")->capture_default_str();
    app.add_option("--carrier", o.carrier, "Carrier frequency v_g k0 in units of Omega1 (default resonant)");
    app.add_option("--samples", o.samples, "CSV of x,re,im samples (x in v_g/Gamma2)");
    app.add_option("--weight", o.weight, "Photon population of the pulse")->capture_default_str();
    app.add_option("--alpha0", o.alpha0, "Initial upper-state amplitude")->capture_default_str();

    auto *probabilities = app.add_subcommand("probabilities", "State populations P_f0, P_e1, P_g2 versus time");
    auto *spectrum = app.add_subcommand("spectrum", "Two-photon spectral density on a square grid");
    auto *identical = app.add_subcommand("identical", "Spectral density of identical photons");
    auto *verify = app.add_subcommand("verify", "Mode-discretized integrator versus closed forms (JSON report)");
    auto *figure = app.add_subcommand("figure", "Data for one figure panel");
    figure->add_option("name", o.figure, "fig2a..d, fig3a..e or fig4a..d")
        ->required()
        ->check(CLI::IsMember(figure_names()));
    auto *pulse = app.add_subcommand("pulse", "Upper-state amplitude for an incident single-photon pulse");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::FileError &e) {
        diagnostic("error", "\x1b[31m", e.what());
        return exit_io;
    } catch (const CLI::ParseError &e) {
        diagnostic("error", "\x1b[31m", e.what());
        return exit_validation;
    }

    try {
        if (*probabilities) return run_probabilities(o, start);
        if (*spectrum) return run_spectrum(o, start);
        if (*identical) return run_identical(o, start);
        if (*verify) return run_verify(o, start);
        if (*figure) return run_figure(o, start);
        if (*pulse) return run_pulse(o, start);
    } catch (const ValidationError &e) {
        diagnostic("error", "\x1b[31m", e.what());
        return exit_validation;
    } catch (const NumericalError &e) {
        std::ostringstream os;
        os << e.what() << " (achieved error " << e.achieved_error() << ")";
        diagnostic("error", "\x1b[31m", os.str());
        return exit_numerical;
    } catch (const IoError &e) {
        diagnostic("error", "\x1b[31m", e.what());
        return exit_io;
    } catch (const std::ios_base::failure &e) {
        diagnostic("error", "\x1b[31m", e.what());
        return exit_io;
    } catch (const std::filesystem::filesystem_error &e) {
        diagnostic("error", "\x1b[31m", e.what());
        return exit_io;
    }
    return exit_validation;
}

int dispatch(const std::vector<std::string> &args) {
    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) argv.push_back(a.c_str());
    return dispatch(static_cast<int>(argv.size()), argv.data());
}

} // namespace wgqed::cli
