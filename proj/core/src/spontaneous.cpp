#include "wgqed/spontaneous.hpp"

#include "wgqed/errors.hpp"

#include <cmath>
#include <sstream>

namespace wgqed {

namespace {

void require_time(double t) {
    if (!(t >= 0.0)) {
        std::ostringstream os;
        os << "time must be non-negative (got " << t << ")";
        throw ValidationError(os.str());
    }
}

// Ordered term of the two-photon amplitude: photon at `first` left the emitter
// after the one at `second` (first <= second in position).
cplx ordered_term(double first, double second, double t, const SystemParams &p) {
    const double v = p.v_g();
    const double gate = heaviside_reg(first) * heaviside_reg(second - first) *
                        heaviside_reg(t - first / v) * heaviside_reg(t - second / v);
    if (gate == 0.0) return 0.0;
    const double t_first = t - first / v;
    const double t_second = t - second / v;
    const cplx upper(-0.5 * p.gamma2(), -p.delta_omega());
    return gate * std::polar(1.0, -p.omega1() * t_first) * std::exp(upper * t_second) *
           std::exp(-0.5 * p.gamma1() * (second - first) / v);
}

} // namespace

cplx alpha_spontaneous(double t, const SystemParams &p) {
    require_time(t);
    return std::exp(-0.5 * p.gamma2() * t);
}

cplx beta_spontaneous(double x, double t, const SystemParams &p) {
    require_time(t);
    const double v = p.v_g();
    const double gate = heaviside_reg(x) * heaviside_reg(t - x / v);
    if (gate == 0.0) return 0.0;
    const double retarded = t - x / v;
    const cplx upper(-0.5 * p.gamma2(), -p.delta_omega());
    return -I * std::sqrt(p.gamma2() / v) * gate * std::exp(upper * retarded) *
           std::exp(-0.5 * p.gamma1() * x / v);
}

cplx gamma_spontaneous(double x1, double x2, double t, const SystemParams &p) {
    require_time(t);
    const double v = p.v_g();
    const double prefactor = -std::sqrt(p.gamma1() * p.gamma2() / (2.0 * v * v));
    return prefactor * (ordered_term(x1, x2, t, p) + ordered_term(x2, x1, t, p));
}

} // namespace wgqed
