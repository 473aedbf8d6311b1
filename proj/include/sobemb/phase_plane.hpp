#pragma once

// Closed-form phase-plane quantities for the denominator function
// f(t) = t^2 - 1 - alpha t^q and the auxiliary families built from it:
// the oval roots x0 < xhat < x1, psi = f'^2 - 2 f f'', the g/g1/g2 family,
// the beta_j / gamma_j families (j = 0..3), the root ratio tau, and the
// comparison polynomials P and Q.
//
// All functions are pure; safe for unrestricted concurrent use.

#include "sobemb/errors.hpp"

namespace sobemb::phase_plane {

/// Critical parameter alpha*(q) = 2/(q-2) * ((q-2)/q)^(q/2) at which the
/// oval degenerates to the single point x* = sqrt(q/(q-2)).
/// Throws DomainError for q <= 2.
double alpha_star(double q);

/// x* = sqrt(q/(q-2)), the degenerate oval point. Throws DomainError for q <= 2.
double critical_point(double q);

/// f(t) = t^2 - 1 - alpha t^q, or its derivative of the given order (0..3).
/// Throws DomainError for t <= 0 or order outside 0..3.
double f_eval(double q, double alpha, double t, int order = 0);

/// A nondegenerate phase-plane oval: the roots x0 < x1 of f together with
/// the interior maximum point xhat of f (where f' changes sign).
struct Oval {
  double q;
  double alpha;
  double x0;
  double xhat;
  double x1;

  double width() const { return x1 - x0; }
};

/// Solves f(x0) = f(x1) = 0 with 1 < x0 < xhat < x1.
/// xhat = (2/(q alpha))^(1/(q-2)) in closed form; the roots by bracketed
/// Newton. Throws DomainError for alpha <= 0 and DegenerateOvalError for
/// alpha >= alpha*(q)(1 - 1e-12).
Oval oval_roots(double q, double alpha);

/// psi(t) = f'(t)^2 - 2 f(t) f''(t); strictly positive on [x0, x1].
/// Throws DomainError for t outside [x0, x1].
double psi_eval(const Oval& oval, double t);

enum class GKind {
  g,   ///< g(t)  = psi(t)^2 / t^(q-3)
  g1,  ///< g1(t) = 2 psi'(t) t - (q-3) psi(t); g' = psi t^(2-q) g1
  g2,  ///< g2(t) = 2 f'(t) t + (q-1) f(t);     g1' = -2 f''' g2
};

/// Evaluates g, g1 or g2 on [x0, x1]. Throws DomainError outside the oval.
double g_family_eval(const Oval& oval, double t, GKind which);

enum class BGFamily { beta, gamma };

/// The closed-form families beta_j(t), gamma_j(t), j = order in 0..3,
/// giving the j-th alpha-derivatives of g at the moving points:
/// d^j/d alpha^j { g(x_k) } = beta_j(x_k) and d^j/d alpha^j { g(xhat) } = gamma_j(xhat).
/// beta_0 = beta, gamma_0 = gamma. Throws DomainError for t <= 0 or order
/// outside 0..3, and a DomainError flagged as a pole when family = beta,
/// order = 3 and (q-2)t^2 = q (the formula's denominator vanishes at x*).
double beta_gamma_eval(double q, double t, BGFamily family, int order);

/// tau(z, q) = (2 z^2 / (z^2 q - (q-2)))^(1/(q-2)), the ratio xhat/x1
/// expressed through z = x1 sqrt((q-2)/q). Requires z >= 1, q > 2;
/// tau(1, q) = 1 and tau decreases in z, increases in q.
double tau_eval(double z, double q);

/// The degree-6 comparison polynomial P(z, q) from the beta3/gamma3 quotient.
double poly_p(double z, double q);

/// The comparison polynomial Q(z, q, tau) from the beta1/gamma1 quotient.
double poly_q(double z, double q, double tau);

/// dQ/dq at fixed (z, tau); Q is convex in q, so this is maximal at q = 4.
double poly_q_dq(double z, double q, double tau);

/// Closed form of dQ/dq at q = 4:
/// -8 tau z^2 (tau^2 z^2 - 1)^2 - (9 - z^2)(z^2 - 1)^2.
double poly_q_dq_at_q4(double z, double tau);

}  // namespace sobemb::phase_plane
