#include "wgqed/observables.hpp"

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

// (e^{-Gamma1 t} - e^{-Gamma2 t}) / (Gamma2 - Gamma1), written with the slower
// exponential outside so that neither factor overflows.
double cascade_kernel(double t, double g1, double g2) {
    const double d = g2 - g1;
    if (d >= 0.0) return t * std::exp(-g1 * t) * exprel(-d * t);
    return t * std::exp(-g2 * t) * exprel(d * t);
}

} // namespace

StateProbabilities state_probabilities(double t, const SystemParams &p) {
    require_time(t);
    const double g1 = p.gamma1();
    const double g2 = p.gamma2();
    StateProbabilities out;
    out.p_f0 = std::exp(-g2 * t);
    if (std::abs(g2 - g1) < 1e-8 * g2) {
        const double gt = g2 * t;
        out.p_e1 = gt * std::exp(-gt);
        out.p_g2 = -std::expm1(-gt) - gt * std::exp(-gt);
        return out;
    }
    const double k = cascade_kernel(t, g1, g2);
    out.p_e1 = g2 * k;
    out.p_g2 = -std::expm1(-g1 * t) - g1 * k;
    return out;
}

cplx beta_k(double k, double t, const SystemParams &p) {
    require_time(t);
    const double v = p.v_g();
    const double g1 = p.gamma1();
    const double g2 = p.gamma2();
    const double w = k * v;
    const cplx upper(0.5 * g2, p.delta_omega());
    const cplx d(-0.5 * (g2 - g1), w - p.delta_omega());
    const cplx pre = -I * std::sqrt(g2 * v / (2.0 * pi));

    // \int_0^t e^{-d u} du times e^{-upper t}.
    cplx integral;
    if (std::abs(d) < 1e-10 * g2) {
        integral = t * std::exp(-upper * t);
    } else if (std::abs(d) * t > 1.0) {
        // Both exponentials decay: e^{-upper t} and e^{-(i omega + Gamma1/2) t}.
        const cplx lower(0.5 * g1, w);
        integral = (std::exp(-upper * t) - std::exp(-lower * t)) / d;
    } else {
        integral = t * std::exp(-upper * t) * exprel(-d * t);
    }
    return pre * integral;
}

namespace {

struct KSpaceRates {
    cplx b1;
    cplx b2;
    cplx c;
};

KSpaceRates kspace_rates(double w1, double w2, const SystemParams &p) {
    const double h1 = 0.5 * p.gamma1();
    return {cplx(-h1, w1 - p.omega1()), cplx(-h1, w2 - p.omega1()),
            cplx(-0.5 * p.gamma2(), (w1 + w2) - p.omega2())};
}

double kspace_prefactor(const SystemParams &p) {
    return p.v_g() / (2.0 * pi) * std::sqrt(0.5 * p.gamma1() * p.gamma2());
}

} // namespace

cplx gamma_k(double k1, double k2, double t, const SystemParams &p) {
    require_time(t);
    const double v = p.v_g();
    const double w1 = k1 * v;
    const double w2 = k2 * v;
    const auto r = kspace_rates(w1, w2, p);
    const cplx phase = std::polar(1.0, -(w1 + w2) * t);
    const cplx sum = phi_divided_difference(r.b1, r.c, t) + phi_divided_difference(r.b2, r.c, t);
    return -kspace_prefactor(p) * phase * sum;
}

cplx gamma_k(double k1, double k2, Asymptotic, const SystemParams &p) {
    const double v = p.v_g();
    const auto r = kspace_rates(k1 * v, k2 * v, p);
    return -kspace_prefactor(p) / r.c * (1.0 / r.b1 + 1.0 / r.b2);
}

double spectral_density(double omega1, double omega2, const SystemParams &p) {
    const double h1 = 0.5 * p.gamma1();
    const double h2 = 0.5 * p.gamma2();
    const double d1 = omega1 - p.omega1();
    const double d2 = omega2 - p.omega1();
    const double s = omega1 + omega2;
    const double lor1 = d1 * d1 + h1 * h1;
    const double lor2 = d2 * d2 + h1 * h1;
    const double two = (s - 2.0 * p.omega1());
    const double num = two * two + 4.0 * h1 * h1;
    const double up = (s - p.omega2()) * (s - p.omega2()) + h2 * h2;
    // Products kept commutative so that S(a, b) == S(b, a) bit for bit.
    return p.gamma1() * p.gamma2() / (8.0 * pi * pi) * num / (up * (lor1 * lor2));
}

double identical_spectrum(double delta, const SystemParams &p) {
    const double g1 = p.gamma1();
    const double g2 = p.gamma2();
    const double shift = 2.0 * delta - p.alpha_r() * p.omega1();
    return 1.0 / (2.0 * pi * pi) * g1 / (delta * delta + 0.25 * g1 * g1) * g2 /
           (shift * shift + 0.25 * g2 * g2);
}

} // namespace wgqed
