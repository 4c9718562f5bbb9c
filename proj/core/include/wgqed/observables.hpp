#pragma once

#include "wgqed/numeric.hpp"
#include "wgqed/params.hpp"

namespace wgqed {

/// Populations of |f,0>, |e,1> and |g,2> during the spontaneous cascade.
struct StateProbabilities {
    double p_f0 = 1.0;
    double p_e1 = 0.0;
    double p_g2 = 0.0;

    double sum() const noexcept { return p_f0 + p_e1 + p_g2; }
};

/// Closed-form populations at time t >= 0. When |Gamma2 - Gamma1| < 1e-8 Gamma2 the
/// equal-rate limit forms are used.
StateProbabilities state_probabilities(double t, const SystemParams &p);

/// Single-photon amplitude in wavenumber space, beta(k, t), with omega = k v_g.
/// Unitary transform (2 pi)^{-1/2} \int e^{-ikx} beta(x) dx.
cplx beta_k(double k, double t, const SystemParams &p);

/// Marker selecting the t -> infinity limit of gamma_k.
struct Asymptotic {};
inline constexpr Asymptotic t_infinity{};

/// Two-photon amplitude gamma(k1, k2, t); symmetric in k1, k2.
cplx gamma_k(double k1, double k2, double t, const SystemParams &p);

/// Late-time two-photon amplitude with the global phase e^{-i(omega1+omega2)t} dropped.
cplx gamma_k(double k1, double k2, Asymptotic, const SystemParams &p);

/// Two-photon spectral density S(omega1, omega2) of the complete cascade (units 1/frequency^2).
/// Equals |gamma_k(k1, k2, inf)|^2 / v_g^2 and integrates to 1 over the plane.
double spectral_density(double omega1, double omega2, const SystemParams &p);

/// Diagonal S(omega, omega) written in the detuning delta = omega - Omega1.
double identical_spectrum(double delta, const SystemParams &p);

} // namespace wgqed
