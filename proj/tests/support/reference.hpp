#pragma once

// Reference values computed independently of this library:
// closed forms evaluated with mpmath at 30 digits, spectrum integrals with
// scipy nested quad (epsabs 1e-13).

namespace wgqed::reference {

// Populations at Gamma2/Gamma1 = 2, Gamma2 t = 1.
inline constexpr double p_f0_ratio2 = 0.367879441171442321;
inline constexpr double p_e1_ratio2 = 0.477302437082382204;
inline constexpr double p_g2_ratio2 = 0.154818121746175474;

inline constexpr double exp_minus_half = 0.606530659712633424;
inline constexpr double exp_minus_one = 0.367879441171442321;

// S(Omega1, (1 + alpha_r) Omega1) at Gamma2 = 0.001, ratio 1.5, alpha_r = -0.03.
inline constexpr double weak_coupling_peak = 304076.116123011467;

// Identical-photon spectrum at Gamma2 = 0.02, alpha_r = -0.03.
inline constexpr double identical_r15_d0 = 303.963550927013314;
inline constexpr double identical_r15_dhalf = 501.383176786826085;
inline constexpr double identical_r3_d0 = 607.927101854026629;
inline constexpr double identical_r3_dhalf = 286.083342048953708;

// Stationary points of the identical-photon spectrum (Brent, xatol 1e-12).
inline constexpr double identical_r15_argmax = -0.0133333333266;
inline constexpr double identical_r15_max = 547.1343916686241;
inline constexpr double identical_r3_argmax = -0.000726266977;
inline constexpr double identical_r3_max = 634.3195839629768;

// Integral of S over [Omega1 - w, Omega1 + w]^2, Gamma2 = 0.02, ratio 1.5, alpha_r = -0.03.
inline constexpr double spectrum_norm_300 = 0.9984091930612135;
inline constexpr double spectrum_norm_600 = 0.9992044236629585;

} // namespace wgqed::reference
