#include "wgqed/general_solution.hpp"

#include "wgqed/errors.hpp"
#include "wgqed/spontaneous.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace wgqed {

namespace {

void require_time(double t) {
    if (!(t >= 0.0)) {
        std::ostringstream os;
        os << "time must be non-negative (got " << t << ")";
        throw ValidationError(os.str());
    }
}

// Longest seed panel: one period of the residual oscillation, capped by the
// envelope scale so a narrow pulse is never stepped over.
double seed_panel(double phase_rate, double envelope_time) {
    double panel = envelope_time > 0.0 ? envelope_time : 0.0;
    if (std::abs(phase_rate) > 0.0) {
        const double period = 2.0 * pi / std::abs(phase_rate);
        panel = panel > 0.0 ? std::min(panel, period) : period;
    }
    return panel;
}

} // namespace

GeneralSolution::GeneralSolution(SystemParams p, cplx alpha0, PulseSpec pulse,
                                 QuadratureOptions opt)
    : p_(p), alpha0_(alpha0), pulse_(std::move(pulse)), opt_(opt) {
    const double population = std::norm(alpha0_) + pulse_.weight();
    if (!(population <= 1.0 + 1e-9)) {
        std::ostringstream os;
        os << "initial state is over-normalized: |alpha0|^2 + pulse weight = " << population;
        throw ValidationError(os.str());
    }
}

cplx GeneralSolution::pulse_drive(double t) const {
    if (pulse_.kind() == PulseSpec::Kind::none) return 0.0;
    const double v = p_.v_g();
    const auto [lo, hi] = pulse_.support();
    // beta_0(-v tau) is non-zero for tau in [-hi/v, -lo/v].
    const double a = std::max(0.0, -hi / v);
    const double b = std::min(t, -lo / v);
    if (!(b > a)) return 0.0;

    std::vector<double> bp;
    for (double x : pulse_.breakpoints()) bp.push_back(-x / v);
    const double rate = p_.delta_omega() - v * pulse_.carrier();
    const double panel = seed_panel(rate, pulse_.envelope_scale() / v);

    const double g1 = p_.gamma1();
    const double g2 = p_.gamma2();
    const double dw = p_.delta_omega();
    auto f = [&](double tau) -> cplx {
        return std::exp(-0.5 * g2 * (t - tau) - 0.5 * g1 * tau) * std::polar(1.0, dw * tau) *
               pulse_(-v * tau);
    };
    return integrate<cplx>(f, a, b, bp, panel, opt_).value;
}

cplx GeneralSolution::memory(double x, double t) const {
    if (pulse_.kind() == PulseSpec::Kind::none) return 0.0;
    const double v = p_.v_g();
    const auto [lo, hi] = pulse_.support();
    // beta_0(v (s - t)) is non-zero for s in [t + lo/v, t + hi/v].
    const double a = std::max(0.0, t + lo / v);
    const double b = std::min(x / v, t + hi / v);
    if (!(b > a)) return 0.0;

    std::vector<double> bp;
    for (double xb : pulse_.breakpoints()) bp.push_back(t + xb / v);
    const double rate = v * pulse_.carrier() - p_.omega1();
    const double panel = seed_panel(rate, pulse_.envelope_scale() / v);

    const double g1 = p_.gamma1();
    const double w1 = p_.omega1();
    const double delay = x / v;
    auto f = [&](double s) -> cplx {
        return std::exp(-0.5 * g1 * s) * std::polar(1.0, -w1 * (s - delay)) * pulse_(v * (s - t));
    };
    return integrate<cplx>(f, a, b, bp, panel, opt_).value;
}

cplx GeneralSolution::alpha(double t) const {
    require_time(t);
    const cplx decay = std::exp(-0.5 * p_.gamma2() * t);
    return alpha0_ * decay - I * p_.v2() * pulse_drive(t);
}

cplx GeneralSolution::beta(double x, double t) const {
    require_time(t);
    const double v = p_.v_g();
    cplx out = std::exp(-0.5 * p_.gamma1() * t) * pulse_(x - v * t);

    const double gate = heaviside_reg(x) * heaviside_reg(t - x / v);
    if (gate == 0.0) return out;
    const double retarded = t - x / v;

    const cplx reemission = -I * (p_.v2() / v) * std::polar(1.0, -p_.delta_omega() * retarded) *
                            std::exp(-0.5 * p_.gamma1() * x / v) * alpha(retarded);
    out += gate * reemission;

    if (pulse_.kind() != PulseSpec::Kind::none) {
        out -= p_.gamma1() * gate * std::exp(-0.5 * p_.gamma1() * retarded) * memory(x, t);
    }
    return out;
}

cplx GeneralSolution::gamma(double x1, double x2, double t) const {
    require_time(t);
    const double v = p_.v_g();
    const cplx prefactor = -I * p_.v1() / (std::sqrt(2.0) * v);
    auto term = [&](double first, double second) -> cplx {
        const double gate = heaviside_reg(first) * heaviside_reg(t - first / v);
        if (gate == 0.0) return 0.0;
        const double emitted = t - first / v;
        return gate * std::polar(1.0, -p_.omega1() * emitted) * beta(second - first, emitted);
    };
    return prefactor * (term(x1, x2) + term(x2, x1));
}

} // namespace wgqed
