#pragma once

#include <stdexcept>
#include <string>

namespace wgqed {

/// Rejected input: parameters, grids, pulse shapes or configuration outside their contract.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A quadrature or time integration did not reach its target accuracy.
/// Carries the error estimate that was achieved before giving up.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string &what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

} // namespace wgqed
