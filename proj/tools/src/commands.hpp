#pragma once

#include "output.hpp"

#include <wgqed/params.hpp>
#include <wgqed/spectrum.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace wgqed::cli {

/// Populations on t = 0 .. t_max_g2 / Gamma2 in `steps` intervals:
/// t_gamma2, p_f0, p_e1, p_g2 (plus the sum when requested).
Table probabilities_table(const SystemParams &p, double t_max_g2, std::size_t steps,
                          bool with_sum = false);

/// Long-format grid, frequencies in units of Omega1, density times Gamma2^2.
Table spectrum_table(const SpectrumGrid &g);

/// Diagonal density on omega in [wmin, wmax] (units of Omega1): omega, delta, s_gamma2sq.
Table identical_table(const SystemParams &p, double wmin, double wmax, std::size_t n);

struct FigureOutput {
    Table table;
    RunManifest manifest;
    // Rendering data for --svg.
    bool heatmap = false;
    std::string title, xlabel, ylabel;
    std::vector<double> x, y, values;
    std::vector<Series> series;
};

/// Names accepted by `figure`.
std::vector<std::string> figure_names();

/// Builds the data of one figure panel with its fixed parameters.
/// `n_override` replaces the default grid size or step count when non-zero.
FigureOutput make_figure(const std::string &name, std::size_t n_override = 0);

} // namespace wgqed::cli
