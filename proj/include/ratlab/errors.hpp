#pragma once

#include <stdexcept>
#include <string>

namespace ratlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation point lies inside the guard band of a pole.
class PoleProximity : public Error {
public:
    using Error::Error;
};

/// A pole lies on or too close to the unit circle.
class GuardViolation : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Node doubling reached max_nodes before meeting rel_tol.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Gram matrix too badly conditioned for the requested basis.
class IllConditioned : public Error {
public:
    using Error::Error;
};

class UnknownKind : public Error {
public:
    using Error::Error;
};

/// Invalid experiment configuration (bad key, value out of domain, grid too large).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The requested best-constant method does not apply to the exponents.
class MethodMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace ratlab
