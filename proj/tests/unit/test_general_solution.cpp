#include <wgqed/errors.hpp>
#include <wgqed/general_solution.hpp>
#include <wgqed/quadrature.hpp>
#include <wgqed/spontaneous.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace wgqed;

namespace {
const WarningSink quiet = [](std::string_view) {};

SystemParams transmon(double v_g = 1.0) { return make_params(1.0, -0.03, 0.02, 1.5, v_g, quiet); }

// Incident photon tuned to the upper transition, half a decay length wide.
PulseSpec resonant_pulse(const SystemParams &p, double weight = 1.0) {
    const double sigma = 0.5 * p.v_g() / p.gamma2();
    return PulseSpec::gaussian(-6.0 * sigma, sigma, p.delta_omega() / p.v_g(), weight);
}

double close(cplx a, cplx b) { return std::abs(a - b); }
} // namespace

TEST(GeneralSolution, ReducesToSpontaneousWithoutPulse) {
    for (double v : {1.0, 2.5}) {
        const auto p = transmon(v);
        const GeneralSolution g(p, 1.0, PulseSpec::none());
        const SpontaneousSolution s(p);
        for (double t : {0.0, 10.0, 75.0, 300.0}) {
            EXPECT_LT(close(g.alpha(t), s.alpha(t)), 1e-12);
            for (double f : {-0.1, 0.0, 0.2, 0.7, 1.0, 1.3}) {
                const double x = f * v * t;
                EXPECT_LT(close(g.beta(x, t), s.beta(x, t)), 1e-12) << v << " " << t << " " << f;
                for (double f2 : {0.0, 0.4, 0.9}) {
                    const double x2 = f2 * v * t;
                    EXPECT_LT(close(g.gamma(x, x2, t), s.gamma(x, x2, t)), 1e-12);
                }
            }
        }
    }
}

TEST(GeneralSolution, VacuumStaysEmpty) {
    const GeneralSolution g(transmon(), 0.0, PulseSpec::none());
    EXPECT_EQ(g.alpha(40.0), cplx(0.0));
    EXPECT_EQ(g.beta(10.0, 40.0), cplx(0.0));
    EXPECT_EQ(g.gamma(10.0, 20.0, 40.0), cplx(0.0));
}

TEST(GeneralSolution, RejectsOverNormalizedState) {
    const auto p = transmon();
    EXPECT_THROW(GeneralSolution(p, 0.8, resonant_pulse(p, 0.5)), ValidationError);
    EXPECT_NO_THROW(GeneralSolution(p, std::sqrt(0.5), resonant_pulse(p, 0.5)));
    const GeneralSolution g(p, 1.0, PulseSpec::none());
    EXPECT_THROW(g.alpha(-1.0), ValidationError);
}

TEST(GeneralSolution, LinearInInitialAmplitudes) {
    const auto p = transmon();
    const auto pulse = resonant_pulse(p, 0.5);
    const cplx a0(0.3, 0.4);
    const GeneralSolution both(p, a0, pulse);
    const GeneralSolution only_pulse(p, 0.0, pulse);
    const SpontaneousSolution s(p);
    for (double t : {50.0, 150.0, 250.0}) {
        EXPECT_LT(close(both.alpha(t), a0 * s.alpha(t) + only_pulse.alpha(t)), 1e-9);
        EXPECT_LT(close(both.beta(0.3 * t, t), a0 * s.beta(0.3 * t, t) + only_pulse.beta(0.3 * t, t)), 1e-9);
    }
}

TEST(GeneralSolution, PulseOnlyPropagatesFreelyAheadOfTheEmitter) {
    const auto p = transmon();
    const auto pulse = resonant_pulse(p);
    const GeneralSolution g(p, 0.0, pulse);
    // Nothing has been emitted yet ahead of the light cone, and before arrival.
    const double t = 100.0;
    for (double x : {-200.0, -120.0, -0.5}) {
        EXPECT_EQ(g.beta(x, t), std::exp(-0.5 * p.gamma1() * t) * pulse(x - t));
    }
    EXPECT_EQ(g.beta(t + 1.0, t), std::exp(-0.5 * p.gamma1() * t) * pulse(1.0));
    // One photon may still be the incident one upstream, but neither can be past the front.
    EXPECT_NE(g.gamma(-100.0, 5.0, t), cplx(0.0));
    EXPECT_EQ(g.gamma(-100.0, -5.0, t), cplx(0.0));
    EXPECT_EQ(g.gamma(t + 1.0, t + 2.0, t), cplx(0.0));
}

TEST(GeneralSolution, PulseExcitesUpperLevel) {
    const auto p = transmon();
    const GeneralSolution g(p, 0.0, resonant_pulse(p));
    double peak = 0.0;
    for (int i = 0; i <= 80; ++i) peak = std::max(peak, std::abs(g.alpha(5.0 * i)));
    EXPECT_GT(peak, 0.3);
    EXPECT_LT(peak, 0.35);
}

TEST(GeneralSolution, GammaIsExchangeSymmetric) {
    const auto p = transmon();
    const GeneralSolution g(p, std::sqrt(0.5), resonant_pulse(p, 0.5));
    for (double x1 : {-40.0, 0.0, 30.0, 120.0}) {
        for (double x2 : {-10.0, 45.0, 150.0}) {
            EXPECT_EQ(g.gamma(x1, x2, 200.0), g.gamma(x2, x1, 200.0));
        }
    }
}

TEST(GeneralSolution, NormConservedWithPulse) {
    const auto p = transmon();
    const auto pulse = resonant_pulse(p);
    const GeneralSolution g(p, 0.0, pulse);
    const double t = 400.0;
    const double lo = pulse.support().first + t;
    QuadratureOptions opt{1e-8, 1e-6, 20000};
    auto b2 = [&](double x) { return std::norm(g.beta(x, t)); };
    const std::vector<double> edges{0.0, t};
    const double p_e1 = integrate<double>(b2, lo, t + 60.0, edges, 10.0, opt).value;
    // Twice the integral over x1 < x2, where both photons sit in [lo, t].
    auto row = [&](double x1) {
        auto f = [&](double x2) { return std::norm(g.gamma(x1, x2, t)); };
        return integrate<double>(f, x1, t, {}, 20.0, opt).value;
    };
    const double p_g2 = 2.0 * integrate<double>(row, std::max(lo, 0.0), t, {}, 20.0, opt).value;
    EXPECT_NEAR(std::norm(g.alpha(t)) + p_e1 + p_g2, 1.0, 1e-5);
}
