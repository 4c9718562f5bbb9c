#include "wgqed/numeric.hpp"

#include <array>
#include <cmath>

namespace wgqed {

double exprel(double x) {
    if (std::abs(x) < 1e-5) return 1.0 + x * (0.5 + x * (1.0 / 6.0 + x / 24.0));
    return std::expm1(x) / x;
}

cplx expm1(cplx z) {
    const double x = z.real();
    const double y = z.imag();
    const double s = std::sin(0.5 * y);
    const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
    const double im = std::exp(x) * std::sin(y);
    return {re, im};
}

cplx exprel(cplx z) {
    if (std::abs(z) < 1e-5) return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
    return expm1(z) / z;
}

namespace {

// J_j(w) = \int_0^1 u^j e^{w u} du for j = 0..N-1.
template <std::size_t N>
std::array<cplx, N> exp_moments(cplx w) {
    std::array<cplx, N> out{};
    if (std::abs(w) <= 2.0) {
        for (std::size_t j = 0; j < N; ++j) {
            cplx term = 1.0;
            cplx sum = 0.0;
            for (int n = 0; n < 60; ++n) {
                const cplx add = term / double(n + j + 1);
                sum += add;
                if (std::abs(add) < 1e-18 * std::abs(sum)) break;
                term *= w / double(n + 1);
            }
            out[j] = sum;
        }
        return out;
    }
    const cplx ew = std::exp(w);
    out[0] = expm1(w) / w;
    for (std::size_t j = 1; j < N; ++j) out[j] = (ew - double(j) * out[j - 1]) / w;
    return out;
}

} // namespace

cplx exp_moment(unsigned j, cplx w) {
    switch (j) {
    case 0: return exp_moments<1>(w)[0];
    case 1: return exp_moments<2>(w)[1];
    case 2: return exp_moments<3>(w)[2];
    default: break;
    }
    cplx sum = 0.0;
    cplx term = 1.0;
    if (std::abs(w) <= 2.0) {
        for (int n = 0; n < 80; ++n) {
            sum += term / double(n + j + 1);
            term *= w / double(n + 1);
        }
        return sum;
    }
    cplx prev = expm1(w) / w;
    const cplx ew = std::exp(w);
    for (unsigned i = 1; i <= j; ++i) prev = (ew - double(i) * prev) / w;
    return prev;
}

cplx phi_divided_difference(cplx b, cplx c, double t) {
    const cplx h = c - b;
    if (std::abs(h) * t > 1e-3) {
        const cplx phi_c = t * exprel(c * t);
        const cplx phi_b = t * exprel(b * t);
        return (phi_c - phi_b) / h;
    }
    // phi^{(j)}(b) = t^{j+1} J_j(b t); sum_{j>=1} h^{j-1}/j! phi^{(j)}(b).
    constexpr std::size_t terms = 7;
    const auto moments = exp_moments<terms>(b * t);
    cplx sum = 0.0;
    cplx hp = 1.0;
    double tp = t * t;
    double fact = 1.0;
    for (std::size_t j = 1; j < terms; ++j) {
        fact *= double(j);
        sum += hp / fact * tp * moments[j];
        hp *= h;
        tp *= t;
    }
    return sum;
}

} // namespace wgqed
