#pragma once

#include "wgqed/numeric.hpp"
#include "wgqed/params.hpp"

namespace wgqed {

/// Heaviside step with theta(0) = 1/2.
constexpr double heaviside_reg(double x) noexcept {
    return x > 0.0 ? 1.0 : (x < 0.0 ? 0.0 : 0.5);
}

// Amplitudes of the spontaneous cascade from |f, 0> with no incident photon.
// All reject t < 0 with ValidationError.

/// Upper-state amplitude e^{-Gamma2 t / 2}.
cplx alpha_spontaneous(double t, const SystemParams &p);

/// One-photon amplitude beta(x, t) with the emitter in |e>; zero outside 0 <= x <= v_g t.
cplx beta_spontaneous(double x, double t, const SystemParams &p);

/// Symmetric two-photon amplitude gamma(x1, x2, t) with the emitter in |g>.
cplx gamma_spontaneous(double x1, double x2, double t, const SystemParams &p);

/// Evaluator bundle for the spontaneous closed forms.
class SpontaneousSolution {
public:
    explicit SpontaneousSolution(SystemParams p) : p_(p) {}

    const SystemParams &params() const noexcept { return p_; }
    cplx alpha(double t) const { return alpha_spontaneous(t, p_); }
    cplx beta(double x, double t) const { return beta_spontaneous(x, t, p_); }
    cplx gamma(double x1, double x2, double t) const { return gamma_spontaneous(x1, x2, t, p_); }

private:
    SystemParams p_;
};

} // namespace wgqed
