#pragma once

// Singular-endpoint quadrature for the half-period integral
//   I_q(alpha) = integral over [x0, x1] of dt / sqrt(f(t))
// and its alpha-derivative. The inverse-square-root endpoint singularities
// are removed by the substitution t = x0 + (x1 - x0) sin^2(theta); the
// transformed integrand is analytic on [0, pi/2] whenever the roots are
// simple, and adaptive Gauss-Kronrod converges spectrally. tanh-sinh is the
// fallback when adaptive subdivision exceeds the evaluation budget.

#include "sobemb/errors.hpp"

namespace sobemb::quadrature {

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;  ///< difference of successive refinements
  long evaluations = 0;
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr long kEvaluationBudget = 1'000'000;

/// I_q(alpha) to absolute tolerance tol.
/// Throws DegenerateOvalError at alpha >= alpha*(q)(1 - 1e-12), DomainError
/// for alpha <= 0 or tol <= 0, ConvergenceError if the budget is exhausted.
QuadResult period_integral(double q, double alpha, double tol = kDefaultTol);

/// dI_q/d alpha = -4q(q-1) * integral of sqrt(f) f' t^(q-3) / psi^2 dt,
/// computed with the same substitution; strictly negative on (0, alpha*).
QuadResult period_integral_deriv(double q, double alpha, double tol = kDefaultTol);

/// Independent closed-form check for q = 4, where f factors over t^2:
/// I_4(alpha) = K(k) / (sqrt(alpha) x1), k^2 = 1 - x0^2/x1^2, with K the
/// complete elliptic integral computed by the arithmetic-geometric mean.
/// Throws DomainError outside (0, 1/4).
double elliptic_oracle_q4(double alpha);

/// lim_{alpha -> alpha*} I_q(alpha) = pi / sqrt(q-2). Throws DomainError for q <= 2.
double period_limit(double q);

/// Residual of the exponent-duality identity
///   I_q(alpha) = 2/(q-2) * I_{2q/(q-2)}(alpha^(2/(q-2))),
/// i.e. |lhs - rhs| from two independent quadratures at tolerance tol.
double duality_residual(double q, double alpha, double tol = kDefaultTol);

}  // namespace sobemb::quadrature
