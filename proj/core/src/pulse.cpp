#include "wgqed/pulse.hpp"

#include "wgqed/errors.hpp"
#include "wgqed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wgqed {

namespace {

void check_weight(double weight) {
    if (!(weight > 0.0 && weight <= 1.0)) {
        std::ostringstream os;
        os << "pulse weight must lie in (0, 1] (got " << weight << ")";
        throw ValidationError(os.str());
    }
}

double exact_sampled_norm(const std::vector<double> &x, const std::vector<cplx> &v) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double h = x[i + 1] - x[i];
        sum += h * (std::norm(v[i]) + std::real(v[i] * std::conj(v[i + 1])) + std::norm(v[i + 1])) /
               3.0;
    }
    return sum;
}

void check_samples(const std::vector<double> &x, const std::vector<cplx> &v) {
    if (x.size() < 2 || x.size() != v.size())
        throw ValidationError("sampled pulse needs at least two (x, value) pairs of equal count");
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (!(x[i + 1] > x[i])) throw ValidationError("sampled pulse grid must increase strictly");
    }
    for (const auto &z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ValidationError("sampled pulse values must be finite");
    }
}

} // namespace

PulseSpec PulseSpec::gaussian(double center, double width, double carrier, double weight) {
    check_weight(weight);
    if (!(width > 0.0) || !std::isfinite(center) || !std::isfinite(carrier))
        throw ValidationError("gaussian pulse needs finite center/carrier and positive width");
    PulseSpec p;
    p.shape_ = Gaussian{center, width, carrier};
    p.weight_ = weight;
    p.amplitude_ = std::sqrt(weight / (std::sqrt(2.0 * pi) * width));
    p.check_norm();
    return p;
}

PulseSpec PulseSpec::rectangular(double left, double right, double carrier, double weight) {
    check_weight(weight);
    if (!(right > left) || !std::isfinite(left) || !std::isfinite(right) || !std::isfinite(carrier))
        throw ValidationError("rectangular pulse needs finite left < right and finite carrier");
    PulseSpec p;
    p.shape_ = Rectangular{left, right, carrier};
    p.weight_ = weight;
    p.amplitude_ = std::sqrt(weight / (right - left));
    p.check_norm();
    return p;
}

PulseSpec PulseSpec::sampled(std::vector<double> x, std::vector<cplx> values) {
    check_samples(x, values);
    const double w = exact_sampled_norm(x, values);
    check_weight(w);
    PulseSpec p;
    p.weight_ = w;
    p.shape_ = Sampled{std::move(x), std::move(values)};
    p.amplitude_ = 1.0;
    p.check_norm();
    return p;
}

PulseSpec PulseSpec::sampled(std::vector<double> x, std::vector<cplx> values, double weight) {
    check_weight(weight);
    auto p = sampled(std::move(x), std::move(values));
    if (std::abs(p.weight_ - weight) > 1e-8) {
        std::ostringstream os;
        os << "sampled pulse norm " << p.weight_ << " does not match declared weight " << weight;
        throw ValidationError(os.str());
    }
    return p;
}

cplx PulseSpec::operator()(double x) const {
    switch (kind()) {
    case Kind::none: return 0.0;
    case Kind::gaussian: {
        const auto &g = std::get<Gaussian>(shape_);
        const double u = (x - g.center) / g.width;
        if (std::abs(u) > 12.0) return 0.0;
        return amplitude_ * std::exp(-0.25 * u * u) * std::polar(1.0, g.carrier * x);
    }
    case Kind::rectangular: {
        const auto &r = std::get<Rectangular>(shape_);
        if (x < r.left || x > r.right) return 0.0;
        // Half height on the edges, matching the theta(0) = 1/2 convention.
        const double h = (x == r.left || x == r.right) ? 0.5 : 1.0;
        return h * amplitude_ * std::polar(1.0, r.carrier * x);
    }
    case Kind::sampled: {
        const auto &s = std::get<Sampled>(shape_);
        if (x < s.x.front() || x > s.x.back()) return 0.0;
        auto it = std::upper_bound(s.x.begin(), s.x.end(), x);
        if (it == s.x.end()) return s.values.back();
        const std::size_t i = static_cast<std::size_t>(it - s.x.begin()) - 1;
        const double f = (x - s.x[i]) / (s.x[i + 1] - s.x[i]);
        return s.values[i] + f * (s.values[i + 1] - s.values[i]);
    }
    }
    return 0.0;
}

cplx PulseSpec::momentum(double k) const {
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * pi);
    switch (kind()) {
    case Kind::none: return 0.0;
    case Kind::gaussian: {
        const auto &g = std::get<Gaussian>(shape_);
        const double q = k - g.carrier;
        return amplitude_ * g.width * std::sqrt(2.0) * std::exp(-g.width * g.width * q * q) *
               std::polar(1.0, -q * g.center);
    }
    case Kind::rectangular: {
        const auto &r = std::get<Rectangular>(shape_);
        const double q = k - r.carrier;
        const double h = r.right - r.left;
        return inv_sqrt_2pi * amplitude_ * h * std::polar(1.0, -q * r.left) *
               exprel(cplx(0.0, -q * h));
    }
    case Kind::sampled: {
        const auto &s = std::get<Sampled>(shape_);
        cplx sum = 0.0;
        for (std::size_t i = 0; i + 1 < s.x.size(); ++i) {
            const double h = s.x[i + 1] - s.x[i];
            const cplx w(0.0, -k * h);
            sum += std::polar(h, -k * s.x[i]) *
                   (s.values[i] * exp_moment(0, w) + (s.values[i + 1] - s.values[i]) * exp_moment(1, w));
        }
        return inv_sqrt_2pi * sum;
    }
    }
    return 0.0;
}

std::pair<double, double> PulseSpec::support() const {
    switch (kind()) {
    case Kind::none: return {0.0, 0.0};
    case Kind::gaussian: {
        const auto &g = std::get<Gaussian>(shape_);
        return {g.center - 12.0 * g.width, g.center + 12.0 * g.width};
    }
    case Kind::rectangular: {
        const auto &r = std::get<Rectangular>(shape_);
        return {r.left, r.right};
    }
    case Kind::sampled: {
        const auto &s = std::get<Sampled>(shape_);
        return {s.x.front(), s.x.back()};
    }
    }
    return {0.0, 0.0};
}

std::vector<double> PulseSpec::breakpoints() const {
    switch (kind()) {
    case Kind::rectangular: {
        const auto &r = std::get<Rectangular>(shape_);
        return {r.left, r.right};
    }
    case Kind::sampled: return std::get<Sampled>(shape_).x;
    case Kind::gaussian: {
        const auto &g = std::get<Gaussian>(shape_);
        return {g.center};
    }
    case Kind::none: break;
    }
    return {};
}

double PulseSpec::carrier() const noexcept {
    if (const auto *g = std::get_if<Gaussian>(&shape_)) return g->carrier;
    if (const auto *r = std::get_if<Rectangular>(&shape_)) return r->carrier;
    return 0.0;
}

double PulseSpec::envelope_scale() const noexcept {
    switch (kind()) {
    case Kind::gaussian: return std::get<Gaussian>(shape_).width;
    case Kind::rectangular: {
        const auto &r = std::get<Rectangular>(shape_);
        return r.right - r.left;
    }
    case Kind::sampled: {
        const auto &x = std::get<Sampled>(shape_).x;
        return x.back() - x.front();
    }
    case Kind::none: break;
    }
    return 0.0;
}

double PulseSpec::norm_by_quadrature() const {
    if (kind() == Kind::none) return 0.0;
    const auto [lo, hi] = support();
    const auto bp = breakpoints();
    // Resolve the carrier-free envelope; |beta_0|^2 carries no oscillation.
    const double panel = kind() == Kind::gaussian ? std::get<Gaussian>(shape_).width : 0.0;
    QuadratureOptions opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-11;
    return integrate<double>([this](double x) { return std::norm((*this)(x)); }, lo, hi, bp, panel,
                             opt)
        .value;
}

void PulseSpec::check_norm() const {
    const double n = norm_by_quadrature();
    if (std::abs(n - weight_) > 1e-8) {
        std::ostringstream os;
        os << "pulse envelope norm " << n << " differs from weight " << weight_;
        throw ValidationError(os.str());
    }
}

} // namespace wgqed
