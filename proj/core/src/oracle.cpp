#include "wgqed/oracle.hpp"

#include "wgqed/errors.hpp"
#include "wgqed/observables.hpp"
#include "wgqed/spontaneous.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wgqed {

namespace {

// -i z without a general complex multiply.
inline cplx minus_i(cplx z) { return {z.imag(), -z.real()}; }

struct Resolved {
    std::size_t n;
    double center;
    double half_width;
    double d_omega;
    double dt;
    std::size_t steps;
    double e0; // energy offset removed from every diagonal element
};

Resolved resolve(const OracleRates &r, const OracleConfig &cfg) {
    auto fail = [](const std::string &msg) { throw ValidationError("oracle config: " + msg); };
    if (!(r.omega1 > 0.0) || !(r.delta_omega > 0.0) || !(r.v_g > 0.0)) {
        fail("omega1, delta_omega and v_g must be positive");
    }
    if (!(r.gamma1 >= 0.0) || !(r.gamma2 >= 0.0)) fail("decay rates must be non-negative");
    if (cfg.n_modes < 101 || cfg.n_modes % 2 == 0) {
        std::ostringstream os;
        os << "n_modes must be odd and >= 101 (got " << cfg.n_modes << ")";
        fail(os.str());
    }
    if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) fail("t_max must be positive");
    if (cfg.stride == 0) fail("snapshot stride must be >= 1");

    Resolved out{};
    out.n = cfg.n_modes;
    const double alpha_r = r.alpha_r();
    out.center = cfg.window_center.value_or(r.omega1 + 0.5 * alpha_r * r.omega1);
    out.half_width = cfg.half_width.value_or(40.0 * std::max(r.gamma1, r.gamma2) +
                                             std::abs(alpha_r) * r.omega1);
    if (!(out.half_width > 0.0)) fail("half_width must be positive");
    if (std::abs(r.omega1 - out.center) >= out.half_width ||
        std::abs(r.delta_omega - out.center) >= out.half_width) {
        std::ostringstream os;
        os << "window [" << out.center - out.half_width << ", " << out.center + out.half_width
           << "] must contain both transition frequencies " << r.omega1 << " and "
           << r.delta_omega;
        fail(os.str());
    }
    out.d_omega = 2.0 * out.half_width / static_cast<double>(out.n - 1);
    out.e0 = cfg.frame == Frame::rotating ? 2.0 * r.omega1 : 0.0;

    // Largest diagonal element sets the step.
    const double top = cfg.frame == Frame::rotating
                           ? out.half_width
                           : 2.0 * (std::abs(out.center) + out.half_width);
    double dt = cfg.dt.value_or(0.1 / top);
    if (!(dt > 0.0)) fail("dt must be positive");
    if (cfg.frame == Frame::rotating && dt * out.half_width > 0.1 * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "dt * half_width = " << dt * out.half_width << " exceeds 0.1";
        fail(os.str());
    }
    out.steps = static_cast<std::size_t>(std::ceil(cfg.t_max / dt - 1e-9));
    out.steps = std::max<std::size_t>(out.steps, 1);
    out.dt = cfg.t_max / static_cast<double>(out.steps);
    return out;
}

std::size_t packed_size(std::size_t n) { return n * (n + 1) / 2; }

// Adds a packed two-photon vector's contribution to the one-photon equations:
// s_n = sum_{m != n} c_nm + sqrt(2) c_nn.
void coupling_sums(const std::vector<cplx> &g, std::size_t n_modes, std::vector<cplx> &s) {
    std::fill(s.begin(), s.end(), cplx{});
    const double r2 = std::sqrt(2.0);
    std::size_t idx = 0;
    for (std::size_t n = 0; n < n_modes; ++n) {
        s[n] += r2 * g[idx++];
        for (std::size_t m = n + 1; m < n_modes; ++m) {
            const cplx v = g[idx++];
            s[n] += v;
            s[m] += v;
        }
    }
}

double squared_norm(const std::vector<cplx> &v) {
    double s = 0.0;
    for (const cplx &z : v) s += std::norm(z);
    return s;
}

class Integrator {
public:
    Integrator(const OracleRates &r, const Resolved &res, const std::vector<double> &omega)
        : n_(res.n), dt_(res.dt) {
        const double dk = res.d_omega / r.v_g;
        g1_ = std::sqrt(r.gamma1 * r.v_g) * std::sqrt(dk / (2.0 * pi));
        g2_ = std::sqrt(r.gamma2 * r.v_g) * std::sqrt(dk / (2.0 * pi));
        ef_ = r.omega2() - res.e0;
        ee_.resize(n_);
        half_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            ee_[i] = r.omega1 + omega[i] - res.e0;
            half_[i] = omega[i] - 0.5 * res.e0;
        }
        const std::size_t p = packed_size(n_);
        yg_.assign(p, cplx{});
        sg_.assign(p, cplx{});
        ag_.assign(p, cplx{});
        yb_.assign(n_, cplx{});
        sb_.assign(n_, cplx{});
        ab_.assign(n_, cplx{});
        db_.assign(n_, cplx{});
        sum_y_.assign(n_, cplx{});
        sum_next_.assign(n_, cplx{});
    }

    void set_state(cplx a, const std::vector<cplx> &b) {
        ya_ = a;
        yb_ = b;
        std::fill(yg_.begin(), yg_.end(), cplx{});
        coupling_sums(yg_, n_, sum_y_);
    }

    // One RK4 step. The stage two-photon vector is overwritten in place: its
    // derivative needs only its own entry and the stage one-photon vector, and the
    // sums feeding the next stage are accumulated on the way.
    void step() {
        static constexpr double weight[4] = {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0};
        static constexpr double advance[3] = {0.5, 0.5, 1.0};
        cplx sa = ya_;
        cplx aa = ya_;
        sb_ = yb_;
        ab_ = yb_;
        std::vector<cplx> *stage_sum = &sum_y_;
        const double r2g1 = std::sqrt(2.0) * g1_;

        for (int k = 0; k < 4; ++k) {
            // Single-excitation and upper-state derivatives at the stage input.
            cplx beta_total{};
            for (std::size_t n = 0; n < n_; ++n) beta_total += sb_[n];
            const cplx da = minus_i(ef_ * sa + g2_ * beta_total);
            for (std::size_t n = 0; n < n_; ++n) {
                db_[n] = minus_i(ee_[n] * sb_[n] + g2_ * sa + g1_ * (*stage_sum)[n]);
            }

            const bool last = k == 3;
            const double wk = weight[k] * dt_;
            const double ck = last ? 0.0 : advance[k] * dt_;
            const std::vector<cplx> &in = k == 0 ? yg_ : sg_;
            std::fill(sum_next_.begin(), sum_next_.end(), cplx{});
            std::size_t idx = 0;
            for (std::size_t n = 0; n < n_; ++n) {
                const cplx bn = sb_[n];
                {
                    const cplx d = minus_i(2.0 * half_[n] * in[idx] + r2g1 * bn);
                    const cplx acc = (k == 0 ? yg_[idx] : ag_[idx]) + wk * d;
                    ag_[idx] = acc;
                    const cplx next = last ? acc : yg_[idx] + ck * d;
                    if (!last) sg_[idx] = next;
                    sum_next_[n] += std::sqrt(2.0) * next;
                    ++idx;
                }
                const double hn = half_[n];
                cplx row{};
                for (std::size_t m = n + 1; m < n_; ++m, ++idx) {
                    const cplx d = minus_i((hn + half_[m]) * in[idx] + g1_ * (bn + sb_[m]));
                    const cplx acc = (k == 0 ? yg_[idx] : ag_[idx]) + wk * d;
                    ag_[idx] = acc;
                    const cplx next = last ? acc : yg_[idx] + ck * d;
                    if (!last) sg_[idx] = next;
                    row += next;
                    sum_next_[m] += next;
                }
                sum_next_[n] += row;
            }

            aa += wk * da;
            for (std::size_t n = 0; n < n_; ++n) ab_[n] += wk * db_[n];
            if (!last) {
                sa = ya_ + ck * da;
                for (std::size_t n = 0; n < n_; ++n) sb_[n] = yb_[n] + ck * db_[n];
            }
            std::swap(sum_y_, sum_next_);
            stage_sum = &sum_y_;
        }
        ya_ = aa;
        yb_.swap(ab_);
        yg_.swap(ag_);
    }

    cplx alpha() const { return ya_; }
    const std::vector<cplx> &beta() const { return yb_; }
    const std::vector<cplx> &gamma() const { return yg_; }
    double norm() const { return std::norm(ya_) + squared_norm(yb_) + squared_norm(yg_); }

private:
    std::size_t n_;
    double dt_;
    double g1_ = 0.0;
    double g2_ = 0.0;
    double ef_ = 0.0;
    std::vector<double> ee_;
    std::vector<double> half_;
    cplx ya_{};
    std::vector<cplx> yb_, sb_, ab_, db_;
    std::vector<cplx> yg_, sg_, ag_;
    std::vector<cplx> sum_y_, sum_next_;
};

} // namespace

cplx OracleTrajectory::alpha_amplitude(const OracleSnapshot &s) const {
    const double e0 = frame == Frame::rotating ? 2.0 * rates.omega1 : 0.0;
    return s.alpha * std::polar(1.0, (rates.omega2() - e0) * s.t);
}

cplx OracleTrajectory::beta_amplitude(const OracleSnapshot &s, std::size_t n) const {
    const double e0 = frame == Frame::rotating ? 2.0 * rates.omega1 : 0.0;
    return s.beta[n] * std::polar(1.0, (rates.omega1 - e0) * s.t) / std::sqrt(dk());
}

cplx OracleTrajectory::gamma_amplitude(std::size_t n, std::size_t m) const {
    if (n > m) std::swap(n, m);
    const double e0 = frame == Frame::rotating ? 2.0 * rates.omega1 : 0.0;
    const double t = snapshots.back().t;
    const double scale = n == m ? dk() : std::sqrt(2.0) * dk();
    return final_gamma[packed_index(n, m, n_modes)] * std::polar(1.0, -e0 * t) / scale;
}

double OracleTrajectory::spectrum_at(std::size_t n, std::size_t m) const {
    if (n > m) std::swap(n, m);
    const double c2 = std::norm(final_gamma[packed_index(n, m, n_modes)]);
    const double dw2 = d_omega * d_omega;
    return n == m ? c2 / dw2 : 0.5 * c2 / dw2;
}

OracleTrajectory run_oracle(const OracleRates &rates, const OracleConfig &cfg,
                            const OracleInit &init) {
    const Resolved res = resolve(rates, cfg);

    OracleTrajectory traj;
    traj.rates = rates;
    traj.frame = cfg.frame;
    traj.n_modes = res.n;
    traj.window_center = res.center;
    traj.half_width = res.half_width;
    traj.d_omega = res.d_omega;
    traj.dt = res.dt;
    traj.steps = res.steps;
    traj.omega.resize(res.n);
    const std::size_t mid = res.n / 2;
    for (std::size_t i = 0; i < res.n; ++i) {
        traj.omega[i] = res.center + (static_cast<double>(i) - static_cast<double>(mid)) * res.d_omega;
    }

    const std::size_t packed = packed_size(res.n);
    const std::size_t n_snap = res.steps / cfg.stride + 2;
    const double bytes = 16.0 * (3.0 * packed + 10.0 * res.n) +
                         16.0 * n_snap * (res.n + (cfg.store_gamma_snapshots ? packed : 0));
    if (bytes > static_cast<double>(cfg.memory_budget_bytes)) {
        std::ostringstream os;
        os << "oracle needs about " << bytes / (1 << 20) << " MiB, budget is "
           << cfg.memory_budget_bytes / (1 << 20) << " MiB";
        throw ValidationError(os.str());
    }

    cplx a0 = 1.0;
    std::vector<cplx> b0(res.n);
    if (const auto *pulse = std::get_if<PulseInit>(&init)) {
        const PulseSpec &ps = pulse->pulse;
        if (std::norm(pulse->alpha0) + ps.weight() > 1.0 + 1e-9) {
            throw ValidationError("initial state is over-normalized");
        }
        a0 = pulse->alpha0;
        if (ps.kind() != PulseSpec::Kind::none) {
            // The discrete modes make space periodic; the pulse and everything it
            // sweeps past in t_max must fit into one period.
            const double period = 2.0 * pi * rates.v_g / res.d_omega;
            const auto [lo, hi] = ps.support();
            const double extent = std::max(hi, 0.0) - lo + rates.v_g * cfg.t_max;
            if (extent > period) {
                std::ostringstream os;
                os << "pulse extent plus propagation (" << extent
                   << ") exceeds the periodic box of the mode grid (" << period
                   << "); use more modes or a narrower window";
                throw ValidationError(os.str());
            }
            const double sdk = std::sqrt(traj.dk());
            double norm = 0.0;
            for (std::size_t i = 0; i < res.n; ++i) {
                b0[i] = sdk * ps.momentum(traj.omega[i] / rates.v_g);
                norm += std::norm(b0[i]);
            }
            if (!(norm > 0.0)) throw ValidationError("pulse has no weight on the mode grid");
            traj.renormalization = std::sqrt(ps.weight() / norm);
            for (auto &b : b0) b *= traj.renormalization;
        }
    }

    Integrator integ(rates, res, traj.omega);
    integ.set_state(a0, b0);
    traj.initial_norm = integ.norm();

    auto record = [&](std::size_t step, bool final) {
        OracleSnapshot s;
        s.t = final ? cfg.t_max : static_cast<double>(step) * res.dt;
        s.alpha = integ.alpha();
        s.beta = integ.beta();
        s.p_g2 = squared_norm(integ.gamma());
        if (cfg.store_gamma_snapshots) s.gamma = integ.gamma();
        const double total = std::norm(s.alpha) + squared_norm(s.beta) + s.p_g2;
        const double drift = std::abs(total - traj.initial_norm);
        traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
        traj.snapshots.push_back(std::move(s));
        if (drift > cfg.norm_tolerance * std::max(traj.initial_norm, 1e-300)) {
            std::ostringstream os;
            os << "oracle norm drifted by " << drift << " at t = " << traj.snapshots.back().t
               << " (step " << step << " of " << res.steps << ", dt = " << res.dt << ")";
            throw NumericalError(os.str(), drift);
        }
    };

    record(0, false);
    for (std::size_t step = 1; step <= res.steps; ++step) {
        integ.step();
        if (step == res.steps) {
            record(step, true);
        } else if (step % cfg.stride == 0) {
            record(step, false);
        }
    }
    traj.final_gamma = integ.gamma();
    return traj;
}

OracleTrajectory run_oracle(const SystemParams &p, const OracleConfig &cfg,
                            const OracleInit &init) {
    return run_oracle(OracleRates::from(p), cfg, init);
}

std::vector<OracleProbabilities> oracle_probabilities(const OracleTrajectory &traj) {
    std::vector<OracleProbabilities> out;
    out.reserve(traj.snapshots.size());
    for (const auto &s : traj.snapshots) {
        out.push_back({s.t, std::norm(s.alpha), squared_norm(s.beta), s.p_g2});
    }
    return out;
}

const ObservableComparison *ComparisonReport::find(const std::string &name) const {
    for (const auto &o : observables) {
        if (o.observable == name) return &o;
    }
    return nullptr;
}

std::string ComparisonReport::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["n_modes"] = n_modes;
    j["dt"] = dt;
    j["t_max"] = t_max;
    j["window"] = {{"center", window_center}, {"half_width", half_width}};
    j["max_norm_drift"] = max_norm_drift;
    j["pass"] = pass;
    auto &list = j["observables"] = nlohmann::ordered_json::array();
    for (const auto &o : observables) {
        nlohmann::ordered_json e;
        e["observable"] = o.observable;
        e["max_abs_err"] = o.max_abs_err;
        e["max_rel_err"] = o.max_rel_err;
        e["tolerance"] = o.tolerance;
        e["pass"] = o.pass;
        if (o.shape_correlation) e["shape_correlation"] = *o.shape_correlation;
        list.push_back(std::move(e));
    }
    return j.dump(indent);
}

namespace {

struct ErrorAccumulator {
    double max_abs = 0.0;
    double max_ref = 0.0;
    void add(double got, double want) {
        max_abs = std::max(max_abs, std::abs(got - want));
        max_ref = std::max(max_ref, std::abs(want));
    }
    ObservableComparison finish(std::string name, double tol, bool relative) const {
        ObservableComparison o;
        o.observable = std::move(name);
        o.max_abs_err = max_abs;
        o.max_rel_err = max_ref > 0.0 ? max_abs / max_ref : max_abs;
        o.tolerance = tol;
        o.pass = (relative ? o.max_rel_err : o.max_abs_err) <= tol;
        return o;
    }
};

struct Correlation {
    ErrorAccumulator err;
    double ab = 0.0, aa = 0.0, bb = 0.0;
    void add(double got, double want) {
        err.add(got, want);
        ab += got * want;
        aa += got * got;
        bb += want * want;
    }
    ObservableComparison finish(std::string name, double min_corr) const {
        auto o = err.finish(std::move(name), min_corr, true);
        const double corr = (aa > 0.0 && bb > 0.0) ? ab / std::sqrt(aa * bb) : 0.0;
        o.shape_correlation = corr;
        o.pass = corr >= min_corr;
        return o;
    }
};

} // namespace

ComparisonReport compare_with_analytic(const OracleTrajectory &traj, const SystemParams &p,
                                       const ComparisonTolerances &tol) {
    ComparisonReport rep;
    rep.n_modes = traj.n_modes;
    rep.dt = traj.dt;
    rep.t_max = traj.snapshots.back().t;
    rep.window_center = traj.window_center;
    rep.half_width = traj.half_width;
    rep.max_norm_drift = traj.max_norm_drift;

    ErrorAccumulator alpha, pf0, pe1, pg2, beta;
    for (const auto &s : traj.snapshots) {
        const auto exact = state_probabilities(s.t, p);
        alpha.add(std::abs(traj.alpha_amplitude(s)), std::abs(alpha_spontaneous(s.t, p)));
        pf0.add(std::norm(s.alpha), exact.p_f0);
        pe1.add(squared_norm(s.beta), exact.p_e1);
        pg2.add(s.p_g2, exact.p_g2);
        for (std::size_t n = 0; n < traj.n_modes; ++n) {
            const double k = traj.omega[n] / p.v_g();
            beta.add(std::abs(traj.beta_amplitude(s, n)), std::abs(beta_k(k, s.t, p)));
        }
    }
    rep.observables.push_back(alpha.finish("alpha", tol.probabilities, false));
    rep.observables.push_back(pf0.finish("P_f0", tol.probabilities, false));
    rep.observables.push_back(pe1.finish("P_e1", tol.probabilities, false));
    rep.observables.push_back(pg2.finish("P_g2", tol.probabilities, false));
    rep.observables.push_back(beta.finish("beta_k", tol.beta_k, true));

    ErrorAccumulator gamma;
    Correlation slice, slice_t;
    const double t_end = rep.t_max;
    for (std::size_t n = 0; n < traj.n_modes; ++n) {
        const double k = traj.omega[n] / p.v_g();
        const cplx g_t = gamma_k(k, k, t_end, p);
        gamma.add(std::abs(traj.gamma_amplitude(n, n)), std::abs(g_t));
        const double got = traj.spectrum_at(n, n);
        slice.add(got, spectral_density(traj.omega[n], traj.omega[n], p));
        slice_t.add(got, std::norm(g_t) / (p.v_g() * p.v_g()));
    }
    rep.observables.push_back(gamma.finish("gamma_kk", tol.gamma_kk, true));
    // Against the complete-cascade density, and against the transform at t_max.
    rep.observables.push_back(slice.finish("spectrum_slice", tol.spectrum_correlation));
    rep.observables.push_back(slice_t.finish("spectrum_slice_finite_t", tol.spectrum_correlation));

    rep.pass = std::all_of(rep.observables.begin(), rep.observables.end(),
                           [](const ObservableComparison &o) { return o.pass; });
    return rep;
}

ComparisonReport compare_with_analytic(const SystemParams &p, const OracleConfig &cfg,
                                       const ComparisonTolerances &tol) {
    return compare_with_analytic(run_oracle(p, cfg, FullyExcited{}), p, tol);
}

} // namespace wgqed
