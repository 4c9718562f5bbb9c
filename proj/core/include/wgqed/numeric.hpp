#pragma once

#include <complex>

namespace wgqed {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

/// (e^x - 1)/x, equal to 1 at x = 0, accurate for all x.
double exprel(double x);

/// Complex (e^z - 1)/z without cancellation near z = 0.
cplx exprel(cplx z);

/// e^z - 1 for complex z without cancellation near z = 0.
cplx expm1(cplx z);

/// J_j(w) = integral over u in [0, 1] of u^j e^{w u}.
cplx exp_moment(unsigned j, cplx w);

/// Divided difference (phi(c) - phi(b)) / (c - b) of phi(z) = (e^{z t} - 1)/z.
///
/// Switches to a Taylor expansion around b when |(c - b) t| is small, so the
/// coincident limit phi'(b) comes out without a 0/0.
cplx phi_divided_difference(cplx b, cplx c, double t);

} // namespace wgqed
