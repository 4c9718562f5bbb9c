#include "wgqed/quadrature.hpp"

#include <cmath>

namespace wgqed {

std::vector<double> seed_edges(double a, double b, std::span<const double> breakpoints,
                               double max_panel, std::size_t max_seed_panels) {
    std::vector<double> edges{a, b};
    for (double x : breakpoints) {
        if (x > a && x < b) edges.push_back(x);
    }
    if (max_panel > 0.0) {
        const double span = b - a;
        std::size_t n = static_cast<std::size_t>(std::ceil(span / max_panel));
        n = std::min(n, max_seed_panels);
        for (std::size_t i = 1; i < n; ++i) edges.push_back(a + span * double(i) / double(n));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

} // namespace wgqed
