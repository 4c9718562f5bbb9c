#pragma once

#include "wgqed/numeric.hpp"
#include "wgqed/params.hpp"
#include "wgqed/pulse.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wgqed {

enum class Frame { rotating, lab };

/// Mode discretization and integration settings for the brute-force integrator.
struct OracleConfig {
    /// Number of waveguide modes; odd and >= 101.
    std::size_t n_modes = 801;
    /// Defaults to Omega1 + alpha_r Omega1 / 2.
    std::optional<double> window_center;
    /// Defaults to 40 max(Gamma1, Gamma2) + |alpha_r| Omega1.
    std::optional<double> half_width;
    /// Defaults to 0.1 / half_width in the rotating frame; rounded down so that
    /// t_max is a whole number of steps.
    std::optional<double> dt;
    double t_max = 0.0;
    Frame frame = Frame::rotating;
    /// Store a snapshot every `stride` steps (plus t = 0 and t_max).
    std::size_t stride = 50;
    /// Keep the full two-photon amplitude at every snapshot, not only at t_max.
    bool store_gamma_snapshots = false;
    /// Largest allowed relative change of the total norm.
    double norm_tolerance = 1e-6;
    /// Allocation ceiling for the state vectors and snapshots.
    std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

/// Emitter rates as seen by the integrator. Unlike SystemParams, gamma1 or gamma2
/// may be zero here (a decoupled transition).
struct OracleRates {
    double omega1;
    double delta_omega;
    double gamma1;
    double gamma2;
    double v_g = 1.0;

    static OracleRates from(const SystemParams &p) {
        return {p.omega1(), p.delta_omega(), p.gamma1(), p.gamma2(), p.v_g()};
    }
    double omega2() const noexcept { return omega1 + delta_omega; }
    double alpha_r() const noexcept { return (delta_omega - omega1) / omega1; }
};

/// Emitter in |f>, field in vacuum.
struct FullyExcited {};

/// Emitter in |e> with an incident photon, plus amplitude alpha0 of |f, 0>.
struct PulseInit {
    PulseSpec pulse;
    cplx alpha0{};
};

using OracleInit = std::variant<FullyExcited, PulseInit>;

/// Stored state at one time. Amplitudes are the integrator's own (frame) coefficients
/// of the normalized basis states; use OracleTrajectory's accessors for the
/// continuum-normalized amplitudes.
struct OracleSnapshot {
    double t = 0.0;
    cplx alpha{};
    std::vector<cplx> beta;
    /// \sum_{n <= m} |c_nm|^2.
    double p_g2 = 0.0;
    /// Packed upper triangle (n <= m), only when store_gamma_snapshots is set.
    std::vector<cplx> gamma;
};

struct OracleTrajectory {
    OracleRates rates;
    Frame frame = Frame::rotating;
    std::size_t n_modes = 0;
    double window_center = 0.0;
    double half_width = 0.0;
    double d_omega = 0.0;
    double dt = 0.0;
    std::size_t steps = 0;
    /// Mode angular frequencies, uniform over [center - half_width, center + half_width].
    std::vector<double> omega;
    std::vector<OracleSnapshot> snapshots;
    /// Packed upper triangle of the two-photon coefficients at t_max.
    std::vector<cplx> final_gamma;
    /// Factor applied to the sampled pulse so its discrete norm equals the pulse weight (1 if none).
    double renormalization = 1.0;
    double initial_norm = 1.0;
    double max_norm_drift = 0.0;

    double dk() const noexcept { return d_omega / rates.v_g; }
    static std::size_t packed_index(std::size_t n, std::size_t m, std::size_t modes) noexcept {
        return n * modes - n * (n - 1) / 2 + (m - n);
    }

    /// Upper-state amplitude alpha(t) in the emitter's interaction picture.
    cplx alpha_amplitude(const OracleSnapshot &s) const;
    /// beta(k_n, t), continuum normalized.
    cplx beta_amplitude(const OracleSnapshot &s, std::size_t n) const;
    /// gamma(k_n, k_m, t_max), continuum normalized and symmetric in n, m.
    cplx gamma_amplitude(std::size_t n, std::size_t m) const;
    /// Late-time two-photon density |gamma(k_n, k_m)|^2 / v_g^2 on the mode grid.
    double spectrum_at(std::size_t n, std::size_t m) const;
};

/// Integrates the two-excitation Schrodinger equation on a uniform mode grid
/// with classic RK4. Throws ValidationError on an invalid configuration or memory
/// budget, NumericalError when the norm drifts beyond cfg.norm_tolerance.
OracleTrajectory run_oracle(const OracleRates &rates, const OracleConfig &cfg,
                            const OracleInit &init = FullyExcited{});
OracleTrajectory run_oracle(const SystemParams &p, const OracleConfig &cfg,
                            const OracleInit &init = FullyExcited{});

struct OracleProbabilities {
    double t;
    double p_f0;
    double p_e1;
    double p_g2;
};

std::vector<OracleProbabilities> oracle_probabilities(const OracleTrajectory &traj);

struct ComparisonTolerances {
    /// Absolute, on P_f0, P_e1, P_g2 and |alpha|^2.
    double probabilities = 1e-3;
    /// Peak-normalized, on |beta_k| at every snapshot.
    double beta_k = 2e-2;
    /// Peak-normalized, on |gamma_kk| at t_max.
    double gamma_kk = 2e-2;
    /// Lower bound on the normalized inner product of the diagonal spectrum slice.
    double spectrum_correlation = 0.99;
};

struct ObservableComparison {
    std::string observable;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::optional<double> shape_correlation;
};

/// Oracle-versus-closed-form errors for the spontaneous cascade.
///
/// max_rel_err is the maximum absolute error divided by the largest reference
/// magnitude of that observable. Serializes to JSON with the fields observable,
/// max_abs_err, max_rel_err, n_modes, dt, window {center, half_width} and pass.
struct ComparisonReport {
    std::vector<ObservableComparison> observables;
    std::size_t n_modes = 0;
    double dt = 0.0;
    double t_max = 0.0;
    double window_center = 0.0;
    double half_width = 0.0;
    double max_norm_drift = 0.0;
    bool pass = false;

    const ObservableComparison *find(const std::string &name) const;
    std::string to_json(int indent = 2) const;
};

/// Compares an existing fully-excited trajectory against the closed forms.
ComparisonReport compare_with_analytic(const OracleTrajectory &traj, const SystemParams &p,
                                       const ComparisonTolerances &tol = {});
/// Runs the oracle from |f, 0> and compares.
ComparisonReport compare_with_analytic(const SystemParams &p, const OracleConfig &cfg,
                                       const ComparisonTolerances &tol = {});

} // namespace wgqed
