#include "sobemb/quadrature.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "detail/gauss_kronrod.hpp"
#include "detail/oval_param.hpp"
#include "sobemb/phase_plane.hpp"

namespace sobemb::quadrature {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_tol(double tol) {
  if (!(tol > 0.0)) {
    throw DomainError(fmt::format("quadrature tolerance must be positive, got {}", tol));
  }
}

template <class F>
QuadResult run_engine(F&& integrand, double tol, const char* what,
                      int initial_panels) {
  auto adaptive = detail::integrate_adaptive(integrand, 0.0, kHalfPi, tol,
                                             kEvaluationBudget, false,
                                             initial_panels);
  if (adaptive.converged) {
    return {adaptive.value, adaptive.error, adaptive.evaluations};
  }
  auto fallback = detail::tanh_sinh(integrand, 0.0, kHalfPi, tol,
                                    kEvaluationBudget - adaptive.evaluations);
  if (fallback.converged) {
    return {fallback.value, fallback.error,
            adaptive.evaluations + fallback.evaluations};
  }
  throw ConvergenceError(fmt::format(
      "{}: tolerance {:.3g} unreachable within {} evaluations (best error {:.3g})",
      what, tol, kEvaluationBudget, std::min(adaptive.error, fallback.error)));
}

/// Subdivision is tightened once the oval is nearly collapsed; the returned
/// value still comes from quadrature (the collapse limit pi/sqrt(q-2) serves
/// only as a cross-check).
int panels_for(double q, double alpha) {
  return alpha > 0.999 * phase_plane::alpha_star(q) ? 16 : 8;
}

}  // namespace

QuadResult period_integral(double q, double alpha, double tol) {
  require_tol(tol);
  const detail::OvalParam oval(phase_plane::oval_roots(q, alpha));
  const auto integrand = [&oval](double theta) {
    const auto p = oval.at(theta);
    return p.jacobian / std::sqrt(p.f);
  };
  return run_engine(integrand, tol, "period_integral", panels_for(q, alpha));
}

QuadResult period_integral_deriv(double q, double alpha, double tol) {
  require_tol(tol);
  const detail::OvalParam oval(phase_plane::oval_roots(q, alpha));
  const double scale = -4.0 * q * (q - 1.0);
  const auto integrand = [&oval, q, scale](double theta) {
    const auto p = oval.at(theta);
    const double fp = phase_plane::f_eval(q, oval.alpha, p.t, 1);
    const double fpp = phase_plane::f_eval(q, oval.alpha, p.t, 2);
    const double psi = fp * fp - 2.0 * p.f * fpp;
    return scale * std::sqrt(p.f) * fp * std::pow(p.t, q - 3.0) / (psi * psi) *
           p.jacobian;
  };
  return run_engine(integrand, tol, "period_integral_deriv", panels_for(q, alpha));
}

double elliptic_oracle_q4(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.25)) {
    throw DomainError(
        fmt::format("elliptic_oracle_q4 requires 0 < alpha < 1/4, got {}", alpha));
  }
  // Roots of alpha s^2 - s + 1 in s = t^2; the smaller one through the
  // conjugate form, which does not cancel for small alpha.
  const double disc = std::sqrt(1.0 - 4.0 * alpha);
  const double s1 = (1.0 + disc) / (2.0 * alpha);
  const double s0 = 2.0 / (1.0 + disc);
  const double x1 = std::sqrt(s1);
  const double complementary_modulus = std::sqrt(s0 / s1);  // = x0/x1
  // K(k) = pi / (2 agm(1, k')).
  double a = 1.0;
  double g = complementary_modulus;
  for (int i = 0; i < 60 && std::abs(a - g) > 2.0 * a * 1.1e-16; ++i) {
    const double an = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = an;
  }
  const double elliptic_k = std::numbers::pi / (2.0 * a);
  return elliptic_k / (std::sqrt(alpha) * x1);
}

double period_limit(double q) {
  if (!(q > 2.0)) {
    throw DomainError(fmt::format("period_limit requires q > 2, got {}", q));
  }
  return std::numbers::pi / std::sqrt(q - 2.0);
}

double duality_residual(double q, double alpha, double tol) {
  const double q_dual = 2.0 * q / (q - 2.0);
  const double alpha_dual = std::pow(alpha, 2.0 / (q - 2.0));
  const QuadResult lhs = period_integral(q, alpha, tol);
  const QuadResult rhs = period_integral(q_dual, alpha_dual, tol);
  return std::abs(lhs.value - 2.0 / (q - 2.0) * rhs.value);
}

}  // namespace sobemb::quadrature
