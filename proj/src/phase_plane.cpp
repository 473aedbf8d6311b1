#include "sobemb/phase_plane.hpp"

#include <cmath>
#include <fmt/format.h>

namespace sobemb::phase_plane {

namespace {

double f_raw(double q, double alpha, double t) {
  return t * t - 1.0 - alpha * std::pow(t, q);
}

double f_prime(double q, double alpha, double t) {
  return 2.0 * t - alpha * q * std::pow(t, q - 1.0);
}

/// Bracketed Newton with bisection fallback on f(., q, alpha).
/// Requires sign(f(lo)) != sign(f(hi)).
double solve_f_root(double q, double alpha, double lo, double hi) {
  double flo = f_raw(q, alpha, lo);
  double t = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double ft = f_raw(q, alpha, t);
    if (std::abs(ft) <= 1e-14 * std::max(1.0, t * t)) return t;
    if ((ft > 0.0) == (flo > 0.0)) {
      lo = t;
      flo = ft;
    } else {
      hi = t;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(hi))) return 0.5 * (lo + hi);
    const double deriv = f_prime(q, alpha, t);
    double next = (deriv != 0.0) ? t - ft / deriv : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
  }
  return t;
}

void require_inside_oval(const Oval& oval, double t, const char* where) {
  const double slack = 1e-9 * std::max(1.0, oval.x1);
  if (!(t >= oval.x0 - slack && t <= oval.x1 + slack)) {
    throw DomainError(fmt::format("{}: t = {} outside the oval [{}, {}]", where,
                                  t, oval.x0, oval.x1));
  }
}

}  // namespace

double alpha_star(double q) {
  if (!(q > 2.0)) {
    throw DomainError(fmt::format("alpha_star requires q > 2, got q = {}", q));
  }
  return 2.0 / (q - 2.0) * std::pow((q - 2.0) / q, q / 2.0);
}

double critical_point(double q) {
  if (!(q > 2.0)) {
    throw DomainError(fmt::format("critical_point requires q > 2, got q = {}", q));
  }
  return std::sqrt(q / (q - 2.0));
}

double f_eval(double q, double alpha, double t, int order) {
  if (!(t > 0.0)) {
    throw DomainError(fmt::format("f_eval requires t > 0, got t = {}", t));
  }
  switch (order) {
    case 0:
      return f_raw(q, alpha, t);
    case 1:
      return f_prime(q, alpha, t);
    case 2:
      return 2.0 - alpha * q * (q - 1.0) * std::pow(t, q - 2.0);
    case 3:
      return -alpha * q * (q - 1.0) * (q - 2.0) * std::pow(t, q - 3.0);
    default:
      throw DomainError(fmt::format("f_eval: derivative order {} not in 0..3", order));
  }
}

Oval oval_roots(double q, double alpha) {
  const double limit = alpha_star(q);
  if (!(alpha > 0.0)) {
    throw DomainError(fmt::format("oval_roots requires alpha > 0, got {}", alpha));
  }
  if (alpha >= limit * (1.0 - 1e-12)) {
    const double xstar = critical_point(q);
    throw DegenerateOvalError(
        fmt::format("oval degenerates to x* = {:.9g} at alpha = {} >= alpha*(q) = {:.17g}",
                    xstar, alpha, limit),
        xstar);
  }
  const double xhat = std::pow(2.0 / (q * alpha), 1.0 / (q - 2.0));
  const double x0 = solve_f_root(q, alpha, 1.0, xhat);
  double ub = 2.0 * std::max(xhat, critical_point(q));
  while (f_raw(q, alpha, ub) > 0.0) ub *= 2.0;  // f -> -inf, terminates
  const double x1 = solve_f_root(q, alpha, xhat, ub);
  return Oval{q, alpha, x0, xhat, x1};
}

double psi_eval(const Oval& oval, double t) {
  require_inside_oval(oval, t, "psi_eval");
  const double f = f_eval(oval.q, oval.alpha, t, 0);
  const double fp = f_eval(oval.q, oval.alpha, t, 1);
  const double fpp = f_eval(oval.q, oval.alpha, t, 2);
  return fp * fp - 2.0 * f * fpp;
}

double g_family_eval(const Oval& oval, double t, GKind which) {
  require_inside_oval(oval, t, "g_family_eval");
  const double q = oval.q;
  const double f = f_eval(q, oval.alpha, t, 0);
  const double fp = f_eval(q, oval.alpha, t, 1);
  switch (which) {
    case GKind::g: {
      const double psi = psi_eval(oval, t);
      return psi * psi / std::pow(t, q - 3.0);
    }
    case GKind::g1: {
      const double psi = psi_eval(oval, t);
      const double psi_prime = -2.0 * f * f_eval(q, oval.alpha, t, 3);
      return 2.0 * psi_prime * t - (q - 3.0) * psi;
    }
    case GKind::g2:
      return 2.0 * fp * t + (q - 1.0) * f;
  }
  throw DomainError("g_family_eval: unknown member");
}

double beta_gamma_eval(double q, double t, BGFamily family, int order) {
  if (!(t > 0.0)) {
    throw DomainError(fmt::format("beta_gamma_eval requires t > 0, got {}", t));
  }
  if (order < 0 || order > 3) {
    throw DomainError(fmt::format("beta_gamma_eval: order {} not in 0..3", order));
  }
  const double t2 = t * t;
  const double v = (q - 2.0) * t2 - q;
  if (family == BGFamily::beta) {
    switch (order) {
      case 0:
        return v * v * v * v / std::pow(t, q + 1.0);
      case 1:
        return v * v / t * ((q - 2.0) * (q - 7.0) * t2 - q * (q + 1.0));
      case 2:
        return -std::pow(t, q - 1.0) *
               (5.0 * (q - 7.0) * (q - 2.0) * (q - 2.0) * t2 * t2 -
                4.0 * q * (q - 1.0) * (q - 2.0) * t2 - q * q * (q + 1.0));
      case 3: {
        if (std::abs(v) <= 1e-12 * std::max(1.0, (q - 2.0) * t2)) {
          throw DomainError(fmt::format(
              "beta_3 has a pole at (q-2)t^2 = q (t = x*); got t = {}", t));
        }
        return std::pow(t, 2.0 * q - 1.0) / v *
               (5.0 * (q + 3.0) * (q - 7.0) * (q - 2.0) * (q - 2.0) * t2 * t2 -
                4.0 * q * (q - 1.0) * (q - 2.0) * (q + 1.0) * t2 -
                q * q * (q - 1.0) * (q + 1.0));
      }
    }
  } else {
    switch (order) {
      case 0: {
        const double coeff = 4.0 * (q - 2.0) / q;
        return coeff * coeff * v * v / std::pow(t, q - 3.0);
      }
      case 1:
        return 8.0 * (q - 2.0) * t / q * v *
               ((q - 2.0) * (q - 7.0) * t2 - q * (q - 3.0));
      case 2:
        return -4.0 * std::pow(t, q - 1.0) *
               (5.0 * (q - 7.0) * (q - 2.0) * (q - 2.0) * t2 * t2 -
                6.0 * q * (q - 2.0) * (q - 5.0) * t2 + q * q * (q - 3.0));
      case 3:
        return 2.0 * q * std::pow(t, 2.0 * q - 3.0) / (q - 2.0) *
               (5.0 * (q + 3.0) * (q - 7.0) * (q - 2.0) * (q - 2.0) * t2 * t2 -
                6.0 * q * (q - 2.0) * (q - 5.0) * (q + 1.0) * t2 +
                q * q * (q - 1.0) * (q - 3.0));
    }
  }
  throw DomainError("beta_gamma_eval: unreachable");
}

double tau_eval(double z, double q) {
  if (!(z >= 1.0)) {
    throw DomainError(fmt::format("tau_eval requires z >= 1, got {}", z));
  }
  if (!(q > 2.0)) {
    throw DomainError(fmt::format("tau_eval requires q > 2, got {}", q));
  }
  return std::pow(2.0 * z * z / (z * z * q - (q - 2.0)), 1.0 / (q - 2.0));
}

double poly_p(double z, double q) {
  const double z2 = z * z;
  const double z4 = z2 * z2;
  const double z6 = z4 * z2;
  return -5.0 * (2.0 * q - 1.0) * (7.0 - q) * (q + 3.0) * z6 -
         2.0 * (q + 2.0) * (11.0 * q * q - 68.0 * q + 1.0) * z4 +
         (14.0 * q * q * q - 55.0 * q * q - 54.0 * q - 1.0) * z2 -
         2.0 * q * (q - 1.0) * (q - 3.0);
}

double poly_q(double z, double q, double tau) {
  const double z2 = z * z;
  const double z4 = z2 * z2;
  const double z6 = z4 * z2;
  const double tau3 = tau * tau * tau;
  const double tau5 = tau3 * tau * tau;
  return -(7.0 - q) * (q - 8.0 * tau5) * z6 +
         (q * (13.0 - 3.0 * q) - 16.0 * tau3 * (5.0 - q)) * z4 +
         (q * (3.0 * q - 5.0) - 8.0 * tau * (q - 3.0)) * z2 - q * (q + 1.0);
}

double poly_q_dq(double z, double q, double tau) {
  const double z2 = z * z;
  const double z4 = z2 * z2;
  const double z6 = z4 * z2;
  const double tau3 = tau * tau * tau;
  const double tau5 = tau3 * tau * tau;
  return (2.0 * q - 7.0 - 8.0 * tau5) * z6 + (13.0 - 6.0 * q + 16.0 * tau3) * z4 +
         (6.0 * q - 5.0 - 8.0 * tau) * z2 - 2.0 * q - 1.0;
}

double poly_q_dq_at_q4(double z, double tau) {
  const double z2 = z * z;
  const double w = tau * tau * z2 - 1.0;
  const double u = z2 - 1.0;
  return -8.0 * tau * z2 * w * w - (9.0 - z2) * u * u;
}

}  // namespace sobemb::phase_plane
