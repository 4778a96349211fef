#ifndef THETA_AGM_ERRORS_HPP
#define THETA_AGM_ERRORS_HPP

#include <stdexcept>

namespace theta_agm {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A truncated series or iteration hit its cap before reaching the
/// requested tolerance.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point enumeration would exceed its configured capacity.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lattice density does not satisfy the even-integer requirement of the
/// duality method.
class DensityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Derivative-free refinement diverged or landed off an expected point.
class OptimizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation defined only for the named lattice families.
class UnsupportedLattice : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace theta_agm

#endif
