#include "wgqed/params.hpp"

#include "wgqed/errors.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

namespace wgqed {

namespace {

void require_positive(double value, const char *name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream os;
        os << name << " must be finite and positive (got " << value << ")";
        throw ValidationError(os.str());
    }
}

} // namespace

void stderr_warning_sink(std::string_view message) {
    std::cerr << "warning: " << message << '\n';
}

SystemParams SystemParams::from_rates(double omega1, double delta_omega, double gamma1,
                                      double gamma2, double v_g) {
    require_positive(omega1, "omega1");
    require_positive(delta_omega, "delta_omega");
    require_positive(gamma1, "gamma1");
    require_positive(gamma2, "gamma2");
    require_positive(v_g, "v_g");
    return SystemParams(omega1, delta_omega, (delta_omega - omega1) / omega1, gamma1, gamma2, v_g);
}

double SystemParams::v1() const { return std::sqrt(gamma1_ * v_g_); }
double SystemParams::v2() const { return std::sqrt(gamma2_ * v_g_); }

SystemParams SystemParams::scaled(double factor) const {
    require_positive(factor, "scale factor");
    return SystemParams(omega1_ * factor, delta_omega_ * factor, alpha_r_, gamma1_ * factor,
                        gamma2_ * factor, v_g_);
}

std::vector<std::string> SystemParams::regime_warnings() const {
    std::vector<std::string> out;
    if (gamma2_ / omega1_ > 0.1) {
        std::ostringstream os;
        os << "gamma2/omega1 = " << gamma2_ / omega1_
           << " exceeds 0.1; rotating-wave results are only qualitative";
        out.push_back(os.str());
    }
    const double a = alpha_r();
    if (a < -0.10 || a > 0.0) {
        std::ostringstream os;
        os << "alpha_r = " << a << " lies outside the transmon range [-0.10, 0]";
        out.push_back(os.str());
    }
    return out;
}

SystemParams make_params(double omega1, double alpha_r, double gamma2, double ratio_g2_g1,
                         double v_g, const WarningSink &warn) {
    require_positive(omega1, "omega1");
    require_positive(gamma2, "gamma2");
    require_positive(ratio_g2_g1, "gamma2/gamma1 ratio");
    if (!std::isfinite(alpha_r) || !(1.0 + alpha_r > 0.0)) {
        std::ostringstream os;
        os << "alpha_r must exceed -1 (got " << alpha_r << "); the ladder would invert";
        throw ValidationError(os.str());
    }
    require_positive(v_g, "v_g");
    const SystemParams p(omega1, omega1 + omega1 * alpha_r, alpha_r, gamma2 / ratio_g2_g1, gamma2,
                         v_g);
    if (warn) {
        for (const auto &w : p.regime_warnings()) warn(w);
    }
    return p;
}

double alpha_r_from_circuit(double ej_over_ec) {
    require_positive(ej_over_ec, "E_J/E_C");
    return -1.0 / std::sqrt(8.0 * ej_over_ec);
}

} // namespace wgqed
