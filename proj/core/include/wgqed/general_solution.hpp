#pragma once

#include "wgqed/numeric.hpp"
#include "wgqed/params.hpp"
#include "wgqed/pulse.hpp"
#include "wgqed/quadrature.hpp"

namespace wgqed {

/// Amplitudes for an arbitrary two-excitation initial state: the emitter in |f>
/// with amplitude alpha0, plus the emitter in |e> with an incident photon pulse.
///
/// alpha(t) is a convolution of the pulse with the |f> decay; beta(x, t) adds the
/// freely propagating pulse, re-emission from |f> and the memory integral over the
/// pulse history; gamma(x1, x2, t) is assembled from beta. Integrals run through
/// adaptive Gauss-Kronrod quadrature (abs 1e-10, rel 1e-8 by default) and throw
/// NumericalError if the refinement budget runs out. Instances are immutable and
/// safe to evaluate from several threads.
class GeneralSolution {
public:
    /// Throws ValidationError when |alpha0|^2 + pulse.weight() exceeds 1 + 1e-9.
    GeneralSolution(SystemParams p, cplx alpha0, PulseSpec pulse, QuadratureOptions opt = {});

    const SystemParams &params() const noexcept { return p_; }
    cplx alpha0() const noexcept { return alpha0_; }
    const PulseSpec &pulse() const noexcept { return pulse_; }

    cplx alpha(double t) const;
    cplx beta(double x, double t) const;
    cplx gamma(double x1, double x2, double t) const;

private:
    // \int_0^t e^{-Gamma2 (t - tau)/2} e^{(i DeltaOmega - Gamma1/2) tau} beta_0(-v tau) dtau
    cplx pulse_drive(double t) const;
    // \int_0^{x/v} e^{-Gamma1 s/2} e^{-i Omega1 (s - x/v)} beta_0(v (s - t)) ds
    cplx memory(double x, double t) const;

    SystemParams p_;
    cplx alpha0_;
    PulseSpec pulse_;
    QuadratureOptions opt_;
};

} // namespace wgqed
