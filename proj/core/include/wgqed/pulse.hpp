#pragma once

#include "wgqed/numeric.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace wgqed {

/// Incident single-photon envelope beta_0(x) accompanying the emitter in |e>.
///
/// Lengths and wavenumbers use the same units as SystemParams (v_g sets the
/// conversion to time). `weight` is the photon population, the L2 norm squared
/// of the envelope.
class PulseSpec {
public:
    enum class Kind { none, gaussian, rectangular, sampled };

    struct Gaussian {
        double center;
        /// Standard deviation of |beta_0|^2; the amplitude falls as exp(-(x-x0)^2 / 4 sigma^2).
        double width;
        double carrier;
    };
    struct Rectangular {
        double left;
        double right;
        double carrier;
    };
    /// Linear interpolation between samples, zero outside [x.front(), x.back()].
    /// The carrier phase must be part of the samples.
    struct Sampled {
        std::vector<double> x;
        std::vector<cplx> values;
    };

    PulseSpec() = default;

    static PulseSpec none() { return {}; }
    static PulseSpec gaussian(double center, double width, double carrier, double weight);
    static PulseSpec rectangular(double left, double right, double carrier, double weight);
    /// Weight taken from the exact integral of the interpolant.
    static PulseSpec sampled(std::vector<double> x, std::vector<cplx> values);
    /// Throws ValidationError unless the interpolant's norm matches `weight` to 1e-8.
    static PulseSpec sampled(std::vector<double> x, std::vector<cplx> values, double weight);

    Kind kind() const noexcept { return static_cast<Kind>(shape_.index()); }
    double weight() const noexcept { return weight_; }

    /// beta_0(x).
    cplx operator()(double x) const;

    /// beta_0(k) = (2 pi)^{-1/2} \int e^{-ikx} beta_0(x) dx.
    cplx momentum(double k) const;

    /// Interval outside of which the envelope is zero (Gaussian: 12 sigma either side,
    /// where the amplitude is below 1e-15 of its peak). Empty pair for `none`.
    std::pair<double, double> support() const;

    /// Points where the envelope or its slope jumps.
    std::vector<double> breakpoints() const;

    /// Carrier wavenumber (0 when the phase lives in samples or there is no pulse).
    double carrier() const noexcept;

    /// Length over which the envelope changes appreciably.
    double envelope_scale() const noexcept;

    /// \int |beta_0|^2 dx by adaptive quadrature.
    double norm_by_quadrature() const;

    const std::variant<std::monostate, Gaussian, Rectangular, Sampled> &shape() const noexcept {
        return shape_;
    }

private:
    std::variant<std::monostate, Gaussian, Rectangular, Sampled> shape_;
    double weight_ = 0.0;
    double amplitude_ = 0.0;

    void check_norm() const;
};

} // namespace wgqed
