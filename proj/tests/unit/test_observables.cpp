#include "reference.hpp"

#include <wgqed/errors.hpp>
#include <wgqed/observables.hpp>
#include <wgqed/quadrature.hpp>
#include <wgqed/spontaneous.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace wgqed;

namespace {
const WarningSink quiet = [](std::string_view) {};

SystemParams transmon(double ratio = 1.5, double gamma2 = 0.02, double v_g = 1.0) {
    return make_params(1.0, -0.03, gamma2, ratio, v_g, quiet);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST(StateProbabilities, InitialState) {
    const auto s = state_probabilities(0.0, transmon());
    EXPECT_EQ(s.p_f0, 1.0);
    EXPECT_EQ(s.p_e1, 0.0);
    EXPECT_EQ(s.p_g2, 0.0);
    EXPECT_THROW(state_probabilities(-1.0, transmon()), ValidationError);
}

TEST(StateProbabilities, RatioTwoAtOneLifetime) {
    const auto p = transmon(2.0);
    const auto s = state_probabilities(1.0 / p.gamma2(), p);
    EXPECT_NEAR(s.p_f0, reference::p_f0_ratio2, 1e-15);
    EXPECT_NEAR(s.p_e1, reference::p_e1_ratio2, 1e-15);
    EXPECT_NEAR(s.p_g2, reference::p_g2_ratio2, 1e-15);
}

TEST(StateProbabilities, SumToOne) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ratio(0.05, 20.0), t(0.0, 5000.0);
    for (int i = 0; i < 2000; ++i) {
        const auto p = transmon(ratio(rng));
        EXPECT_NEAR(state_probabilities(t(rng), p).sum(), 1.0, 1e-14);
    }
}

TEST(StateProbabilities, EqualRateBranchIsContinuous) {
    const double t = 80.0;
    const auto a = state_probabilities(t, transmon(1.0));
    for (double eps : {1e-9, 1e-7, 1e-5}) {
        const auto b = state_probabilities(t, transmon(1.0 + eps));
        EXPECT_NEAR(a.p_e1, b.p_e1, 5.0 * eps);
        EXPECT_NEAR(a.p_g2, b.p_g2, 5.0 * eps);
    }
}

TEST(StateProbabilities, MatchSpatialIntegrals) {
    const auto p = transmon(0.7);
    const SpontaneousSolution s(p);
    const double t = 90.0;
    auto f = [&](double x) { return std::norm(s.beta(x, t)); };
    EXPECT_NEAR(integrate<double>(f, 0.0, t, {}, 0.0, {1e-14, 1e-12}).value, state_probabilities(t, p).p_e1, 1e-11);
}

TEST(BetaK, MatchesTransformOfSpatialAmplitude) {
    for (double v : {1.0, 2.0}) {
        const auto p = transmon(1.5, 0.02, v);
        const SpontaneousSolution s(p);
        const double t = 120.0;
        for (double w : {0.9, 0.97, 0.985, 1.0, 1.1}) {
            const double k = w / v;
            auto f = [&](double x) { return std::polar(1.0, -k * x) * s.beta(x, t); };
            const cplx num = integrate<cplx>(f, 0.0, v * t, {}, v, {1e-13, 1e-11}).value / std::sqrt(2.0 * pi);
            EXPECT_LT(std::abs(num - beta_k(k, t, p)), 1e-10) << v << " " << w;
        }
    }
}

TEST(BetaK, BranchesAgreeNearResonance) {
    const auto p = transmon();
    const double t = 60.0;
    // |D| t crosses 1 and |D| crosses 1e-10 Gamma2 along this sweep.
    const double k0 = p.delta_omega();
    for (double dk : {0.0, 1e-13, 1e-11, 1e-6, 0.01, 0.0166, 0.0167, 0.05}) {
        const cplx a = beta_k(k0 + dk, t, p);
        auto f = [&](double u) { return std::exp(-cplx(-0.5 * (p.gamma2() - p.gamma1()), dk) * u); };
        const cplx direct = -I * std::sqrt(p.gamma2() / (2 * pi)) * std::exp(-cplx(0.5 * p.gamma2(), k0) * t) *
                            integrate<cplx>(f, 0.0, t, {}, 0.0, {1e-15, 1e-13}).value;
        EXPECT_LT(std::abs(a - direct), 1e-13) << dk;
    }
}

TEST(BetaK, EmittedPopulationMatchesParseval) {
    const auto p = transmon(1.5);
    const double t = 150.0;
    auto f = [&](double k) { return std::norm(beta_k(k, t, p)); };
    const std::vector<double> bp{p.delta_omega()};
    const double in_band = integrate<double>(f, p.delta_omega() - 20.0, p.delta_omega() + 20.0, bp, 0.01, {1e-12, 1e-10}).value;
    // Lorentzian tails beyond +-20: about (Gamma2 / 2 pi) * 2 / 20 times the weight.
    EXPECT_NEAR(in_band, state_probabilities(t, p).p_e1, 5e-4);
}

TEST(GammaK, SymmetricAndApproachesAsymptote) {
    const auto p = transmon();
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> w(0.93, 1.03);
    for (int i = 0; i < 200; ++i) {
        const double a = w(rng), b = w(rng);
        EXPECT_EQ(gamma_k(a, b, 50.0, p), gamma_k(b, a, 50.0, p));
        EXPECT_EQ(gamma_k(a, b, t_infinity, p), gamma_k(b, a, t_infinity, p));
        const double t = 5000.0;
        const cplx late = gamma_k(a, b, t, p) * std::polar(1.0, (a + b) * t);
        EXPECT_LT(std::abs(late - gamma_k(a, b, t_infinity, p)), 1e-6 * std::abs(gamma_k(a, b, t_infinity, p)) + 1e-9);
    }
}

TEST(GammaK, MatchesTwoDimensionalTransform) {
    const auto p = transmon(1.5, 0.05);
    const SpontaneousSolution s(p);
    const double t = 60.0;
    QuadratureOptions opt{1e-11, 1e-9, 20000};
    for (auto [k1, k2] : {std::pair{1.0, 0.97}, std::pair{0.99, 0.99}, std::pair{1.02, 0.93}}) {
        auto row = [&](double x1) {
            auto f = [&](double x2) { return std::polar(1.0, -k1 * x1 - k2 * x2) * s.gamma(x1, x2, t); };
            const std::vector<double> bp{x1};
            return integrate<cplx>(f, 0.0, t, bp, 2.0, opt).value;
        };
        const cplx num = integrate<cplx>(row, 0.0, t, {}, 2.0, opt).value / (2.0 * pi);
        EXPECT_LT(std::abs(num - gamma_k(k1, k2, t, p)), 1e-7 * std::abs(gamma_k(k1, k2, t, p)) + 1e-9)
            << k1 << " " << k2;
    }
}

TEST(SpectralDensity, WeakCouplingPeak) {
    const auto p = transmon(1.5, 0.001);
    EXPECT_LT(rel(spectral_density(1.0, 0.97, p), reference::weak_coupling_peak), 1e-12);
    EXPECT_EQ(spectral_density(1.0, 0.97, p), spectral_density(0.97, 1.0, p));
}

TEST(SpectralDensity, EqualsAsymptoticAmplitudeSquared) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> w(0.9, 1.05);
    for (double v : {1.0, 3.0}) {
        const auto p = transmon(2.5, 0.02, v);
        for (int i = 0; i < 500; ++i) {
            const double a = w(rng), b = w(rng);
            const double g2 = std::norm(gamma_k(a / v, b / v, t_infinity, p));
            EXPECT_LT(rel(g2 / (v * v), spectral_density(a, b, p)), 1e-13);
        }
    }
}

TEST(SpectralDensity, BitwiseSymmetric) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> w(0.5, 1.5), r(0.1, 10.0);
    for (int i = 0; i < 10000; ++i) {
        const auto p = transmon(r(rng));
        const double a = w(rng), b = w(rng);
        EXPECT_EQ(spectral_density(a, b, p), spectral_density(b, a, p));
    }
}

TEST(IdenticalSpectrum, DiagonalOfSpectralDensity) {
    for (double ratio : {0.5, 1.5, 3.0}) {
        const auto p = transmon(ratio);
        for (int i = 0; i <= 700; ++i) {
            const double d = -0.05 + 1e-4 * i;
            EXPECT_LT(rel(identical_spectrum(d, p), spectral_density(1.0 + d, 1.0 + d, p)), 1e-13);
        }
    }
}

TEST(IdenticalSpectrum, NominalValues) {
    EXPECT_LT(rel(identical_spectrum(0.0, transmon(1.5)), reference::identical_r15_d0), 1e-13);
    EXPECT_LT(rel(identical_spectrum(-0.015, transmon(1.5)), reference::identical_r15_dhalf), 1e-13);
    EXPECT_LT(rel(identical_spectrum(0.0, transmon(3.0)), reference::identical_r3_d0), 1e-13);
    EXPECT_LT(rel(identical_spectrum(-0.015, transmon(3.0)), reference::identical_r3_dhalf), 1e-13);
}

TEST(IdenticalSpectrum, StationaryPoints) {
    // Each Lorentzian pulls the other's maximum; the true maxima are not at 0 and alpha_r/2.
    struct Case {
        double ratio, argmax, max;
    };
    for (auto c : {Case{1.5, reference::identical_r15_argmax, reference::identical_r15_max},
                   Case{3.0, reference::identical_r3_argmax, reference::identical_r3_max}}) {
        const auto p = transmon(c.ratio);
        const double h = 1e-7;
        EXPECT_LT(rel(identical_spectrum(c.argmax, p), c.max), 1e-9);
        EXPECT_GT(identical_spectrum(c.argmax, p), identical_spectrum(c.argmax - h, p));
        EXPECT_GT(identical_spectrum(c.argmax, p), identical_spectrum(c.argmax + h, p));
        double best = 0.0;
        for (int i = 0; i <= 70000; ++i) best = std::max(best, identical_spectrum(-0.05 + 1e-6 * i, p));
        EXPECT_LE(best, c.max * (1 + 1e-12));
    }
}
