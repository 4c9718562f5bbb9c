#pragma once

#include "wgqed/params.hpp"

#include <cstddef>
#include <vector>

namespace wgqed {

struct FrequencyRange {
    double lo;
    double hi;
};

/// Two-photon spectral density sampled on a rectangular frequency grid.
/// values is row-major: values[i * axis2.size() + j] = S(axis1[i], axis2[j]).
struct SpectrumGrid {
    std::vector<double> axis1;
    std::vector<double> axis2;
    std::vector<double> values;
    SystemParams params;

    double at(std::size_t i, std::size_t j) const { return values[i * axis2.size() + j]; }
    double max_value() const;
};

/// Uniform n1 x n2 grid of spectral_density. Rejects n < 2 and empty or non-finite ranges.
SpectrumGrid spectrum_grid(FrequencyRange w1, FrequencyRange w2, std::size_t n1, std::size_t n2,
                           const SystemParams &p);

struct Peak {
    double omega1;
    double omega2;
    double value;
    std::size_t i;
    std::size_t j;
};

/// Local maxima sorted by value, largest first.
struct PeakList {
    std::vector<Peak> peaks;
    /// Neighbourhood radius in grid cells used for detection.
    std::size_t radius = 1;
};

/// Interior grid points strictly above all 8 neighbours and above
/// min_prominence * max(S). Edge points are never reported.
PeakList find_peaks(const SpectrumGrid &grid, double min_prominence = 0.01);

struct SpectrumNorm {
    double value;
    /// Analytic estimate of the mass outside the window (Lorentzian tails).
    double truncation_bound;
    /// Quadrature error estimate of the outer integral.
    double quadrature_error;
};

/// \iint S over [Omega1 - half_width, Omega1 + half_width]^2 by iterated adaptive
/// quadrature, with `n` seed panels per axis. Requires
/// half_width >= 50 max(Gamma1, Gamma2) + |alpha_r| Omega1.
SpectrumNorm spectrum_norm(const SystemParams &p, double half_width, std::size_t n = 64);

} // namespace wgqed
