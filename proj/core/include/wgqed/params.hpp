#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wgqed {

/// Receives non-fatal regime warnings (rotating-wave validity, unusual anharmonicity).
using WarningSink = std::function<void(std::string_view)>;

/// Writes "warning: <msg>" to stderr.
void stderr_warning_sink(std::string_view message);

/// Emitter and waveguide parameters of the three-level ladder.
///
/// All quantities share one unit system; the library defaults to
/// Omega1 = 1 and v_g = 1. Immutable after construction.
class SystemParams {
public:
    /// Validates omega1, gamma1, gamma2, v_g > 0 and delta_omega > 0.
    static SystemParams from_rates(double omega1, double delta_omega, double gamma1,
                                   double gamma2, double v_g = 1.0);

    double omega1() const noexcept { return omega1_; }
    double delta_omega() const noexcept { return delta_omega_; }
    double gamma1() const noexcept { return gamma1_; }
    double gamma2() const noexcept { return gamma2_; }
    double v_g() const noexcept { return v_g_; }

    double omega2() const noexcept { return omega1_ + delta_omega_; }
    double alpha_r() const noexcept { return alpha_r_; }
    double decay_ratio() const noexcept { return gamma2_ / gamma1_; }
    double v1() const;
    double v2() const;

    /// Returns a copy with every frequency and rate multiplied by `factor`.
    SystemParams scaled(double factor) const;

    /// Human-readable regime warnings for this parameter set (empty when none apply).
    std::vector<std::string> regime_warnings() const;

private:
    SystemParams(double omega1, double delta_omega, double alpha_r, double gamma1, double gamma2,
                 double v_g)
        : omega1_(omega1), delta_omega_(delta_omega), alpha_r_(alpha_r), gamma1_(gamma1),
          gamma2_(gamma2), v_g_(v_g) {}

    friend SystemParams make_params(double, double, double, double, double, const WarningSink &);

    double omega1_;
    double delta_omega_;
    // Kept alongside delta_omega so that small anharmonicities survive a round trip.
    double alpha_r_;
    double gamma1_;
    double gamma2_;
    double v_g_;
};

/// Builds parameters from the anharmonicity and the decay-rate ratio Gamma2/Gamma1.
///
/// delta_omega = omega1 (1 + alpha_r), gamma1 = gamma2 / ratio_g2_g1. Throws
/// ValidationError on non-positive frequencies or rates and on alpha_r <= -1.
/// Regime warnings (gamma2/omega1 > 0.1, alpha_r outside [-0.10, 0]) go to `warn`.
SystemParams make_params(double omega1, double alpha_r, double gamma2, double ratio_g2_g1,
                         double v_g = 1.0, const WarningSink &warn = stderr_warning_sink);

/// Transmon anharmonicity -(8 E_J/E_C)^(-1/2) from the ratio E_J/E_C.
double alpha_r_from_circuit(double ej_over_ec);

} // namespace wgqed
