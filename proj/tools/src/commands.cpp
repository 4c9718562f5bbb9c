#include "commands.hpp"

#include <wgqed/errors.hpp>
#include <wgqed/observables.hpp>

#include <cstdio>
#include <map>

namespace wgqed::cli {

Table probabilities_table(const SystemParams &p, double t_max_g2, std::size_t steps,
                          bool with_sum) {
    if (!(t_max_g2 > 0.0)) throw ValidationError("--t-max must be positive");
    if (steps < 1) throw ValidationError("--steps must be >= 1");
    Table t{{"t_gamma2", "p_f0", "p_e1", "p_g2"}, {}};
    if (with_sum) t.header.push_back("sum");
    t.rows.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        const double tg = t_max_g2 * static_cast<double>(i) / static_cast<double>(steps);
        const auto pr = state_probabilities(tg / p.gamma2(), p);
        std::vector<double> row{tg, pr.p_f0, pr.p_e1, pr.p_g2};
        if (with_sum) row.push_back(pr.sum());
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table spectrum_table(const SpectrumGrid &g) {
    const double w = g.params.omega1();
    const double s = g.params.gamma2() * g.params.gamma2();
    Table t{{"omega1", "omega2", "s_gamma2sq"}, {}};
    t.rows.reserve(g.values.size());
    for (std::size_t i = 0; i < g.axis1.size(); ++i) {
        for (std::size_t j = 0; j < g.axis2.size(); ++j) {
            t.rows.push_back({g.axis1[i] / w, g.axis2[j] / w, g.at(i, j) * s});
        }
    }
    return t;
}

Table identical_table(const SystemParams &p, double wmin, double wmax, std::size_t n) {
    if (n < 2) throw ValidationError("--n must be >= 2");
    if (!(wmax > wmin)) throw ValidationError("--wmax must exceed --wmin");
    const double s = p.gamma2() * p.gamma2();
    Table t{{"omega", "delta", "s_gamma2sq"}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        const double w = wmin + (wmax - wmin) * static_cast<double>(i) / static_cast<double>(n - 1);
        const double delta = (w - 1.0) * p.omega1();
        t.rows.push_back({w, w - 1.0, identical_spectrum(delta, p) * s});
    }
    return t;
}

namespace {

constexpr double fig_gamma2 = 0.02;

struct SpectrumPanel {
    double alpha_r, ratio, gamma2, lo, hi;
};

const std::map<std::string, double> &fig2_ratios() {
    static const std::map<std::string, double> m{
        {"fig2a", 10.0}, {"fig2b", 1.5}, {"fig2c", 0.5}, {"fig2d", 0.1}};
    return m;
}

const std::map<std::string, SpectrumPanel> &fig3_panels() {
    static const std::map<std::string, SpectrumPanel> m{
        {"fig3a", {-0.05, 1.5, fig_gamma2, 0.92, 1.04}},
        {"fig3b", {-0.03, 1.5, fig_gamma2, 0.95, 1.02}},
        {"fig3c", {-0.03, 3.0, fig_gamma2, 0.95, 1.02}},
        {"fig3d", {-0.02, 3.0, fig_gamma2, 0.95, 1.03}},
        {"fig3e", {-0.03, 1.5, 0.001, 0.95, 1.02}},
    };
    return m;
}

const std::map<std::string, double> &fig4_ratios() {
    static const std::map<std::string, double> m{
        {"fig4a", 1.5}, {"fig4b", 3.0}, {"fig4c", 1.5}, {"fig4d", 3.0}};
    return m;
}

constexpr double fig4_dlo = -0.05, fig4_dhi = 0.02;

SystemParams quiet_params(double alpha_r, double gamma2, double ratio) {
    return make_params(1.0, alpha_r, gamma2, ratio, 1.0, [](std::string_view) {});
}

void describe(RunManifest &m, const SystemParams &p) {
    m.set("omega1", p.omega1());
    m.set("alpha_r", p.alpha_r());
    m.set("gamma2_over_omega1", p.gamma2() / p.omega1());
    m.set("ratio_gamma2_gamma1", p.decay_ratio());
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

std::vector<std::string> figure_names() {
    std::vector<std::string> out;
    for (const auto &[k, v] : fig2_ratios()) out.push_back(k);
    for (const auto &[k, v] : fig3_panels()) out.push_back(k);
    for (const auto &[k, v] : fig4_ratios()) out.push_back(k);
    return out;
}

FigureOutput make_figure(const std::string &name, std::size_t n_override) {
    FigureOutput f;
    f.manifest.command = "figure " + name;

    if (auto it = fig2_ratios().find(name); it != fig2_ratios().end()) {
        const auto p = quiet_params(-0.03, fig_gamma2, it->second);
        const std::size_t steps = n_override ? n_override : 500;
        describe(f.manifest, p);
        f.manifest.set("t_max_gamma2", 10.0);
        f.manifest.set("steps", static_cast<double>(steps));
        f.table = probabilities_table(p, 10.0, steps, true);
        f.title = "State probabilities, Gamma2/Gamma1 = " + label(it->second);
        f.xlabel = "Gamma2 t";
        f.ylabel = "probability";
        for (const auto &r : f.table.rows) f.x.push_back(r[0]);
        const char *names[] = {"P_f0", "P_e1", "P_g2", "sum"};
        for (std::size_t c = 1; c <= 4; ++c) {
            Series s{names[c - 1], {}};
            for (const auto &r : f.table.rows) s.y.push_back(r[c]);
            f.series.push_back(std::move(s));
        }
        return f;
    }

    if (auto it = fig3_panels().find(name); it != fig3_panels().end()) {
        const auto &c = it->second;
        const auto p = quiet_params(c.alpha_r, c.gamma2, c.ratio);
        const std::size_t n = n_override ? n_override : 501;
        describe(f.manifest, p);
        f.manifest.set("wmin", c.lo);
        f.manifest.set("wmax", c.hi);
        f.manifest.set("n", static_cast<double>(n));
        const auto g = spectrum_grid({c.lo, c.hi}, {c.lo, c.hi}, n, n, p);
        f.table = spectrum_table(g);
        f.heatmap = true;
        f.title = "S(omega1, omega2) Gamma2^2, " + name;
        f.xlabel = "omega1 / Omega1";
        f.ylabel = "omega2 / Omega1";
        f.x = g.axis1;
        f.y = g.axis2;
        // Heatmap rows run over omega2.
        f.values.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) f.values[j * n + i] = g.at(i, j) * c.gamma2 * c.gamma2;
        }
        return f;
    }

    if (auto it = fig4_ratios().find(name); it != fig4_ratios().end()) {
        const double ratio = it->second;
        const std::size_t n = n_override ? n_override : 701;
        const bool lines = name == "fig4a" || name == "fig4b";
        f.manifest.set("omega1", 1.0);
        f.manifest.set("gamma2_over_omega1", fig_gamma2);
        f.manifest.set("ratio_gamma2_gamma1", ratio);
        f.manifest.set("delta_min", fig4_dlo);
        f.manifest.set("delta_max", fig4_dhi);
        f.manifest.set("n", static_cast<double>(n));
        std::vector<double> delta(n);
        for (std::size_t i = 0; i < n; ++i) {
            delta[i] = fig4_dlo + (fig4_dhi - fig4_dlo) * static_cast<double>(i) / static_cast<double>(n - 1);
        }
        const double s = fig_gamma2 * fig_gamma2;
        if (lines) {
            const std::vector<double> alphas{-0.03, -0.04, -0.06};
            f.manifest.set("alpha_r", "-0.03 -0.04 -0.06");
            f.table.header = {"delta", "s_ar_m0.03", "s_ar_m0.04", "s_ar_m0.06"};
            f.x = delta;
            for (double a : alphas) f.series.push_back({"alpha_r = " + label(a), {}});
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<double> row{delta[i]};
                for (std::size_t k = 0; k < alphas.size(); ++k) {
                    const auto p = quiet_params(alphas[k], fig_gamma2, ratio);
                    const double v = identical_spectrum(delta[i], p) * s;
                    row.push_back(v);
                    f.series[k].y.push_back(v);
                }
                f.table.rows.push_back(std::move(row));
            }
            f.title = "Identical photons, Gamma2/Gamma1 = " + label(ratio);
            f.xlabel = "delta / Omega1";
            f.ylabel = "S Gamma2^2";
            return f;
        }
        const std::size_t na = 101;
        f.manifest.set("alpha_r_min", -0.10);
        f.manifest.set("alpha_r_max", 0.0);
        f.manifest.set("alpha_r_n", static_cast<double>(na));
        f.table.header = {"alpha_r", "delta", "s_gamma2sq"};
        f.heatmap = true;
        f.x = delta;
        for (std::size_t j = 0; j < na; ++j) {
            const double a = -0.10 * (1.0 - static_cast<double>(j) / static_cast<double>(na - 1));
            f.y.push_back(a);
            const auto p = quiet_params(a, fig_gamma2, ratio);
            for (std::size_t i = 0; i < n; ++i) {
                const double v = identical_spectrum(delta[i], p) * s;
                f.table.rows.push_back({a, delta[i], v});
                f.values.push_back(v);
            }
        }
        f.title = "Identical photons vs anharmonicity, Gamma2/Gamma1 = " + label(ratio);
        f.xlabel = "delta / Omega1";
        f.ylabel = "alpha_r";
        return f;
    }

    throw ValidationError("unknown figure '" + name + "'");
}

} // namespace wgqed::cli
