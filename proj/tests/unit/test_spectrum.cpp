#include "reference.hpp"

#include <wgqed/errors.hpp>
#include <wgqed/observables.hpp>
#include <wgqed/spectrum.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace wgqed;

namespace {
const WarningSink quiet = [](std::string_view) {};

SystemParams transmon(double ratio, double alpha_r = -0.03) {
    return make_params(1.0, alpha_r, 0.02, ratio, 1.0, quiet);
}
} // namespace

TEST(SpectrumGrid, LayoutAndSymmetry) {
    const auto p = transmon(1.5);
    const auto g = spectrum_grid({0.95, 1.02}, {0.95, 1.02}, 71, 71, p);
    ASSERT_EQ(g.values.size(), 71u * 71u);
    EXPECT_EQ(g.axis1.front(), 0.95);
    EXPECT_EQ(g.axis1.back(), 1.02);
    for (std::size_t i = 0; i < 71; ++i) {
        for (std::size_t j = 0; j < 71; ++j) {
            EXPECT_EQ(g.at(i, j), g.at(j, i));
            EXPECT_EQ(g.at(i, j), spectral_density(g.axis1[i], g.axis2[j], p));
        }
    }
}

TEST(SpectrumGrid, RejectsBadGrids) {
    const auto p = transmon(1.5);
    EXPECT_THROW(spectrum_grid({0.9, 1.1}, {0.9, 1.1}, 1, 10, p), ValidationError);
    EXPECT_THROW(spectrum_grid({1.1, 0.9}, {0.9, 1.1}, 10, 10, p), ValidationError);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(spectrum_grid({0.9, nan}, {0.9, 1.1}, 10, 10, p), ValidationError);
}

TEST(FindPeaks, FlatGridHasNone) {
    SpectrumGrid g{{0, 1, 2, 3}, {0, 1, 2, 3}, std::vector<double>(16, 2.0), transmon(1.5)};
    EXPECT_TRUE(find_peaks(g).peaks.empty());
}

TEST(FindPeaks, EdgeMaximaAreIgnored) {
    std::vector<double> v(25, 0.0);
    v[0] = 5.0;
    v[2 * 5 + 2] = 1.0;
    SpectrumGrid g{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, v, transmon(1.5)};
    const auto peaks = find_peaks(g).peaks;
    ASSERT_EQ(peaks.size(), 1u);
    EXPECT_EQ(peaks[0].i, 2u);
    EXPECT_EQ(peaks[0].j, 2u);
}

TEST(FindPeaks, TwoOffDiagonalPeaksAtWeakCoupling) {
    const auto p = make_params(1.0, -0.03, 0.001, 1.5, 1.0, quiet);
    const auto g = spectrum_grid({0.95, 1.02}, {0.95, 1.02}, 501, 501, p);
    const auto peaks = find_peaks(g).peaks;
    ASSERT_EQ(peaks.size(), 2u);
    EXPECT_EQ(peaks[0].value, peaks[1].value);
    EXPECT_EQ(peaks[0].omega1, peaks[1].omega2);
    const double cell = 0.07 / 500;
    for (const auto &pk : peaks) {
        const double hi = std::max(pk.omega1, pk.omega2), lo = std::min(pk.omega1, pk.omega2);
        EXPECT_NEAR(hi, 1.0, cell);
        EXPECT_NEAR(lo, 0.97, cell);
    }
}

TEST(FindPeaks, DiagonalPeakSitsAtTheStationaryPoint) {
    const auto p = transmon(3.0);
    const auto g = spectrum_grid({0.95, 1.02}, {0.95, 1.02}, 501, 501, p);
    const auto peaks = find_peaks(g).peaks;
    const double cell = 0.07 / 500;
    const double target = 1.0 + reference::identical_r3_argmax;
    bool found = false;
    for (const auto &pk : peaks) {
        if (pk.i == pk.j && std::abs(pk.omega1 - target) <= cell) found = true;
    }
    EXPECT_TRUE(found);
    EXPECT_GE(peaks.size(), 3u);
    for (std::size_t k = 1; k < peaks.size(); ++k) EXPECT_GE(peaks[k - 1].value, peaks[k].value);
}

TEST(SpectrumNorm, IntegratesToOne) {
    const auto p = make_params(1.0, -0.03, 0.02, 1.5, 1.0, quiet);
    const auto n300 = spectrum_norm(p, 300 * p.gamma1());
    EXPECT_NEAR(n300.value, reference::spectrum_norm_300, 1e-8);
    EXPECT_NEAR(n300.value, 1.0, 0.02);
    EXPECT_LE(1.0 - n300.value, n300.truncation_bound);
    const auto n600 = spectrum_norm(p, 600 * p.gamma1());
    EXPECT_NEAR(n600.value, reference::spectrum_norm_600, 1e-8);
    EXPECT_LT(std::abs(n600.value - n300.value), n300.truncation_bound);
    EXPECT_LT(n600.truncation_bound, n300.truncation_bound);
}

TEST(SpectrumNorm, InvariantUnderFrequencyScaling) {
    const auto p = make_params(1.0, -0.03, 0.02, 1.5, 1.0, quiet);
    const auto q = p.scaled(10.0);
    EXPECT_NEAR(spectrum_norm(q, 3000 * p.gamma1()).value, spectrum_norm(p, 300 * p.gamma1()).value, 1e-8);
    EXPECT_NEAR(spectral_density(10.0, 9.7, q) * 100.0, spectral_density(1.0, 0.97, p), 1e-10 * spectral_density(1.0, 0.97, p));
}

TEST(SpectrumNorm, RejectsNarrowWindow) {
    const auto p = make_params(1.0, -0.03, 0.02, 1.5, 1.0, quiet);
    EXPECT_THROW(spectrum_norm(p, 0.5), ValidationError);
}
