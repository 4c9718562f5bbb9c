#pragma once

#include "wgqed/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <sstream>
#include <vector>

namespace wgqed {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    /// Refinement budget: total number of panels the adaptive loop may hold.
    std::size_t max_panels = 20000;
};

template <class T>
struct QuadratureResult {
    T value{};
    double error = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

template <class T>
struct Panel {
    double a;
    double b;
    T value;
    double error;
    bool operator<(const Panel &o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gauss_kronrod15(const F &f, double a, double b) {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    static const auto &xk = gauss_kronrod<double, 15>::abscissa();
    static const auto &wk = gauss_kronrod<double, 15>::weights();
    static const auto &wg = gauss<double, 7>::weights();

    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T f0 = f(c);
    T kronrod = wk[0] * f0;
    T gauss7 = wg[0] * f0;
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const T pair = f(c - h * xk[i]) + f(c + h * xk[i]);
        kronrod += wk[i] * pair;
        // Gauss nodes sit at the even Kronrod indices.
        if (i % 2 == 0) gauss7 += wg[i / 2] * pair;
    }
    kronrod *= h;
    gauss7 *= h;
    return {a, b, kronrod, std::abs(kronrod - gauss7)};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration over [edges.front(), edges.back()].
///
/// `edges` is a sorted list of seed panel boundaries; discontinuities and kinks
/// of the integrand must appear in it. The panel with the largest error estimate
/// is bisected until the summed estimate drops below max(abs_tol, rel_tol |I|).
/// Throws NumericalError with the achieved estimate once the panel budget runs out.
template <class T, class F>
QuadratureResult<T> integrate_panels(const F &f, std::span<const double> edges,
                                     const QuadratureOptions &opt = {}) {
    QuadratureResult<T> out;
    if (edges.size() < 2) return out;

    std::priority_queue<detail::Panel<T>> heap;
    T total{};
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i + 1] > edges[i])) continue;
        auto p = detail::gauss_kronrod15<T>(f, edges[i], edges[i + 1]);
        out.evaluations += 15;
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }

    auto converged = [&] {
        return total_err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    };
    while (!heap.empty() && !converged()) {
        if (heap.size() >= opt.max_panels) {
            std::ostringstream os;
            os << "adaptive quadrature exhausted " << opt.max_panels
               << " panels; error estimate " << total_err;
            throw NumericalError(os.str(), total_err);
        }
        auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw NumericalError("adaptive quadrature reached floating-point resolution",
                                 total_err);
        }
        auto left = detail::gauss_kronrod15<T>(f, worst.a, mid);
        auto right = detail::gauss_kronrod15<T>(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to shed the drift of the running updates.
    total = T{};
    total_err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        total_err += heap.top().error;
        heap.pop();
    }
    out.value = total;
    out.error = total_err;
    return out;
}

/// Seed panel boundaries over [a, b]: `breakpoints` inside the interval plus a
/// uniform subdivision with panels no longer than `max_panel` (ignored if <= 0).
std::vector<double> seed_edges(double a, double b, std::span<const double> breakpoints,
                               double max_panel, std::size_t max_seed_panels = 4096);

template <class T, class F>
QuadratureResult<T> integrate(const F &f, double a, double b,
                              std::span<const double> breakpoints = {}, double max_panel = 0.0,
                              const QuadratureOptions &opt = {}) {
    if (!(b > a)) return {};
    const auto edges = seed_edges(a, b, breakpoints, max_panel);
    return integrate_panels<T>(f, edges, opt);
}

} // namespace wgqed
