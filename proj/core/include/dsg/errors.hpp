#pragma once

#include <stdexcept>
#include <string>

namespace dsg {

// Invalid configuration or out-of-domain argument (CLI exit code 2).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Curvature exactly zero at a critical point: classification impossible.
class DegenerateCurvatureError : public DomainError {
public:
    using DomainError::DomainError;
};

// Static solver failed to reach the requested tolerance (CLI exit code 3).
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double residual)
        : std::runtime_error(what), last_residual(residual) {}
    double last_residual;
};

// Newton step hit a numerically singular Jacobian.
class SingularJacobianError : public SolverError {
public:
    using SolverError::SolverError;
};

// Expansion point is not a stable minimum: some curvature eigenvalue is
// non-positive in exact arithmetic (CLI exit code 4).
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(const std::string& what, double min_eigenvalue)
        : std::runtime_error(what), min_eigenvalue(min_eigenvalue) {}
    double min_eigenvalue;
};

// Reduced covariance block produced an unphysical symplectic value.
class NumericalDegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File emission failure (CLI exit code 5).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dsg
