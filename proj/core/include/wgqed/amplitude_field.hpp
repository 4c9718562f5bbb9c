#pragma once

#include "wgqed/errors.hpp"
#include "wgqed/numeric.hpp"

#include <concepts>
#include <cstddef>
#include <vector>

namespace wgqed {

template <class E>
concept AmplitudeEvaluator = requires(const E &e, double a) {
    { e.alpha(a) } -> std::convertible_to<cplx>;
    { e.beta(a, a) } -> std::convertible_to<cplx>;
    { e.gamma(a, a, a) } -> std::convertible_to<cplx>;
};

/// Uniform sampling grid shared by both photon coordinates.
struct FieldGrid {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t points = 401;

    /// [0, v_g t] with `points` samples, the region where the photons can be.
    static FieldGrid causal(double t, double v_g, std::size_t points = 401) {
        if (!(t > 0.0)) throw ValidationError("causal grid needs t > 0");
        return {0.0, v_g * t, points};
    }

    double at(std::size_t i) const {
        return x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
};

/// Amplitudes at one instant sampled on a FieldGrid.
///
/// gamma is stored row-major as points x points and is filled from the upper
/// triangle, so gamma(i, j) == gamma(j, i) bit for bit.
struct AmplitudeField {
    double t = 0.0;
    cplx alpha{};
    std::vector<double> x;
    std::vector<cplx> beta;
    std::vector<cplx> gamma;

    std::size_t size() const noexcept { return x.size(); }
    bool has_gamma() const noexcept { return !gamma.empty(); }
    cplx gamma_at(std::size_t i, std::size_t j) const { return gamma[i * x.size() + j]; }
};

template <AmplitudeEvaluator E>
AmplitudeField sample_field(const E &eval, double t, const FieldGrid &grid,
                            bool with_gamma = true) {
    if (grid.points < 2 || !(grid.x_max > grid.x_min)) {
        throw ValidationError("field grid needs at least 2 points over a non-empty range");
    }
    AmplitudeField f;
    f.t = t;
    f.alpha = eval.alpha(t);
    const std::size_t n = grid.points;
    f.x.resize(n);
    f.beta.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        f.x[i] = grid.at(i);
        f.beta[i] = eval.beta(f.x[i], t);
    }
    if (with_gamma) {
        f.gamma.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                const cplx g = eval.gamma(f.x[i], f.x[j], t);
                f.gamma[i * n + j] = g;
                f.gamma[j * n + i] = g;
            }
        }
    }
    return f;
}

} // namespace wgqed
