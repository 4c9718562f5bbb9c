#include "wgqed/spectrum.hpp"

#include "wgqed/errors.hpp"
#include "wgqed/numeric.hpp"
#include "wgqed/observables.hpp"
#include "wgqed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wgqed {

double SpectrumGrid::max_value() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

namespace {

std::vector<double> uniform_axis(FrequencyRange r, std::size_t n, const char *name) {
    if (n < 2) {
        std::ostringstream os;
        os << name << " needs at least 2 points (got " << n << ")";
        throw ValidationError(os.str());
    }
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.hi > r.lo)) {
        std::ostringstream os;
        os << name << " range must be finite and increasing (got [" << r.lo << ", " << r.hi
           << "])";
        throw ValidationError(os.str());
    }
    std::vector<double> axis(n);
    for (std::size_t i = 0; i < n; ++i) {
        axis[i] = r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return axis;
}

} // namespace

SpectrumGrid spectrum_grid(FrequencyRange w1, FrequencyRange w2, std::size_t n1, std::size_t n2,
                           const SystemParams &p) {
    SpectrumGrid g{uniform_axis(w1, n1, "omega1 axis"), uniform_axis(w2, n2, "omega2 axis"), {}, p};
    g.values.resize(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            g.values[i * n2 + j] = spectral_density(g.axis1[i], g.axis2[j], p);
        }
    }
    return g;
}

PeakList find_peaks(const SpectrumGrid &grid, double min_prominence) {
    PeakList out;
    const std::size_t n1 = grid.axis1.size();
    const std::size_t n2 = grid.axis2.size();
    if (n1 < 3 || n2 < 3) return out;
    const double floor = min_prominence * grid.max_value();
    for (std::size_t i = 1; i + 1 < n1; ++i) {
        for (std::size_t j = 1; j + 1 < n2; ++j) {
            const double v = grid.at(i, j);
            if (!(v > floor)) continue;
            bool is_max = true;
            for (int di = -1; di <= 1 && is_max; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    if (!(v > grid.at(i + di, j + dj))) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max) out.peaks.push_back({grid.axis1[i], grid.axis2[j], v, i, j});
        }
    }
    std::stable_sort(out.peaks.begin(), out.peaks.end(),
                     [](const Peak &a, const Peak &b) { return a.value > b.value; });
    return out;
}

SpectrumNorm spectrum_norm(const SystemParams &p, double half_width, std::size_t n) {
    const double widest = std::max(p.gamma1(), p.gamma2());
    const double needed = 50.0 * widest + std::abs(p.alpha_r()) * p.omega1();
    if (!(half_width >= needed)) {
        std::ostringstream os;
        os << "spectrum window half-width " << half_width
           << " does not cover both transitions (need >= " << needed << ")";
        throw ValidationError(os.str());
    }
    if (n < 1) throw ValidationError("spectrum_norm needs at least one seed panel");

    const double lo = p.omega1() - half_width;
    const double hi = p.omega1() + half_width;
    const double panel = (hi - lo) / static_cast<double>(n);
    // Each photon line is centred at Omega1 or at DeltaOmega = Omega2 - Omega1.
    const std::vector<double> lines{p.omega1(), p.delta_omega()};

    QuadratureOptions inner_opt{1e-13, 1e-10, 20000};
    QuadratureOptions outer_opt{1e-11, 1e-9, 20000};

    auto inner = [&](double w1) {
        std::vector<double> bp = lines;
        // Two-photon resonance omega1 + omega2 = Omega2.
        bp.push_back(p.omega2() - w1);
        auto f = [&](double w2) { return spectral_density(w1, w2, p); };
        return integrate<double>(f, lo, hi, bp, panel, inner_opt).value;
    };
    const auto outer = integrate<double>(inner, lo, hi, lines, panel, outer_opt);

    // Tail mass of a Lorentzian with half-width h beyond distance d is about h / (pi d).
    // Each marginal is the average of the two lines; both axes contribute.
    auto tails = [&](double center, double h) {
        return h / pi * (1.0 / (center - lo) + 1.0 / (hi - center));
    };
    const double h1 = 0.5 * p.gamma1();
    const double h12 = 0.5 * (p.gamma1() + p.gamma2());
    const double bound = tails(p.omega1(), h1) + tails(p.delta_omega(), h12);
    return {outer.value, bound, outer.error};
}

} // namespace wgqed
