#pragma once

#include <stdexcept>
#include <string>

namespace fhmp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter set violates an invariant. Carries the offending field name
/// so front ends can report field-level messages.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& msg)
        : Error(field + ": " + msg), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Evaluation requested outside the defined domain (singular time, s-range).
class EvalDomainError : public Error {
public:
    using Error::Error;
};

/// The square root defining 1/R has a negative radicand; the parameter set
/// admits no real R. Carries the radicand value for diagnostics.
class RNotRealError : public Error {
public:
    explicit RNotRealError(double radicand)
        : Error("1/R is not real: radicand = " + std::to_string(radicand)),
          radicand_(radicand) {}
    double radicand() const noexcept { return radicand_; }

private:
    double radicand_;
};

/// A wavefunction operation was requested for a state with gamma1 <= 0,
/// whose s->0 factor is not normalizable.
class NonBoundError : public Error {
public:
    NonBoundError(int n, double gamma1)
        : Error("state n=" + std::to_string(n) +
                " is not bound (gamma1 = " + std::to_string(gamma1) + ")"),
          n_(n), gamma1_(gamma1) {}
    int n() const noexcept { return n_; }
    double gamma1() const noexcept { return gamma1_; }

private:
    int n_;
    double gamma1_;
};

/// An iterative scheme (Newton root polish, quadrature refinement,
/// Richardson-controlled grid study) failed to reach its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A computed quantity came out non-finite or violated an internal identity.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace fhmp
