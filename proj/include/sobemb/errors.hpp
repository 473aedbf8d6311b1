#pragma once

#include <stdexcept>
#include <string>

namespace sobemb {

/// Argument outside an operation's domain (bad exponent, order, range, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The phase-plane oval has collapsed: alpha at or beyond the critical value.
/// Carries the collapse point x* = sqrt(q/(q-2)).
class DegenerateOvalError : public std::runtime_error {
public:
  DegenerateOvalError(const std::string& what, double degenerate_point)
      : std::runtime_error(what), degenerate_point_(degenerate_point) {}
  double degenerate_point() const { return degenerate_point_; }

private:
  double degenerate_point_;
};

/// A quadrature or iteration exhausted its evaluation budget before
/// reaching the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A sign-change count could not be isolated at the configured resolution.
class InconclusiveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A reconstructed object failed one of its defining identities.
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace sobemb
