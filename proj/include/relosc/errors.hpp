#pragma once

#include <stdexcept>
#include <string>

namespace relosc {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument sits on a pole of the gamma function (0, -1, -2, ...).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Polynomial or physical parameters outside the admissible domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// The coupling lies below the hermiticity bound; carries the bound.
class CollapseError : public Error {
public:
    CollapseError(const std::string& what, double g_crit)
        : Error(what), g_crit_(g_crit) {}
    double g_crit() const noexcept { return g_crit_; }

private:
    double g_crit_;
};

/// Non-relativistic exponent d = sqrt(1 + 8 g0) / 2 is not real.
class ComplexExponentError : public Error {
public:
    using Error::Error;
};

/// Operator applied at a point where its multiplicative factor is singular.
class SingularPointError : public Error {
public:
    using Error::Error;
};

/// Quadrature truncation tail exceeds the requested accuracy.
class GridTooSmallError : public Error {
public:
    using Error::Error;
};

}  // namespace relosc
