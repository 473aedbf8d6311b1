#pragma once

// Internal parameterization of the oval [x0, x1] by t = x0 + (x1-x0) sin^2(theta).
// f is evaluated as an exact difference from the nearer computed root,
//   f(t) = f(t) - f(x_root) = (t^2 - x_root^2) - alpha (t^q - x_root^q),
// with the power difference through expm1/log1p. This keeps f accurate near
// the roots (where direct evaluation cancels catastrophically, e.g. for
// near-degenerate ovals) and makes the integrand consistent with the computed
// endpoints: the evaluated function vanishes exactly at x0 and x1.

#include <cmath>

#include "sobemb/phase_plane.hpp"

namespace sobemb::detail {

struct OvalParam {
  explicit OvalParam(const phase_plane::Oval& oval)
      : q(oval.q),
        alpha(oval.alpha),
        x0(oval.x0),
        x1(oval.x1),
        width(oval.x1 - oval.x0),
        x0_pow_q(std::pow(oval.x0, oval.q)),
        x1_pow_q(std::pow(oval.x1, oval.q)) {}

  double q, alpha, x0, x1, width, x0_pow_q, x1_pow_q;

  /// f at t given the offsets d0 = t - x0 >= 0 and d1 = x1 - t >= 0.
  double f_from_offsets(double t, double d0, double d1) const {
    if (d0 <= d1) {
      return d0 * (t + x0) - alpha * x0_pow_q * std::expm1(q * std::log1p(d0 / x0));
    }
    return -d1 * (t + x1) - alpha * x1_pow_q * std::expm1(q * std::log1p(-d1 / x1));
  }

  struct Point {
    double t;
    double f;
    double jacobian;  ///< dt/dtheta = width * sin(2 theta)
  };

  Point at(double theta) const {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double d0 = width * s * s;
    const double d1 = width * c * c;
    const double t = (d0 <= d1) ? x0 + d0 : x1 - d1;
    return {t, f_from_offsets(t, d0, d1), width * 2.0 * s * c};
  }
};

}  // namespace sobemb::detail
