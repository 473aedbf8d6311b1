#include "sobemb/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <span>

#include "detail/gauss_kronrod.hpp"
#include "detail/oval_param.hpp"
#include "sobemb/phase_plane.hpp"
#include "sobemb/quadrature.hpp"

namespace sobemb::solutions {

namespace {

using std::numbers::pi;

void require_problem(double q, double T) {
  if (!(q > 2.0)) {
    throw DomainError(fmt::format("requires q > 2, got q = {}", q));
  }
  if (!(T > 0.0)) {
    throw DomainError(fmt::format("requires T > 0, got T = {}", T));
  }
}

/// 5-point central differences on a periodic sample vector (spacing h).
std::vector<double> periodic_derivative(std::span<const double> y, double h) {
  const size_t n = y.size();
  std::vector<double> dy(n);
  const auto at = [&](size_t j, long offset) {
    const long idx = (static_cast<long>(j) + offset + static_cast<long>(n)) %
                     static_cast<long>(n);
    return y[static_cast<size_t>(idx)];
  };
  for (size_t j = 0; j < n; ++j) {
    dy[j] = (-at(j, 2) + 8.0 * at(j, 1) - 8.0 * at(j, -1) + at(j, -2)) / (12.0 * h);
  }
  return dy;
}

struct ProfileIntegrals {
  double h1_sq;   ///< int (y'^2 + y^2)
  double lq_pow;  ///< int y^q
};

ProfileIntegrals profile_integrals(const PeriodicProfile& profile) {
  const size_t n = profile.y.size() - 1;  // drop the duplicated endpoint
  const double h = 2.0 * profile.T / static_cast<double>(n);
  const std::span<const double> y(profile.y.data(), n);
  const auto dy = periodic_derivative(y, h);
  double h1 = 0.0, lq = 0.0;
  for (size_t j = 0; j < n; ++j) {
    h1 += dy[j] * dy[j] + y[j] * y[j];
    lq += std::pow(y[j], profile.q);
  }
  return {h1 * h, lq * h};
}

}  // namespace

int band_index(double q, double T) {
  require_problem(q, T);
  const double s = T / pi * std::sqrt(q - 2.0);
  return std::max(1, static_cast<int>(std::ceil(s)));
}

SolutionCount count_periodic_solutions(double q, double T) {
  const int k = band_index(q, T);
  SolutionCount count{k, {}};
  for (int n = 1; n < k; ++n) count.solvable_n.push_back(n);
  return count;
}

std::optional<double> solve_alpha_for_period(double q, double T, int n, double tol) {
  require_problem(q, T);
  if (n < 1) throw DomainError(fmt::format("oscillation count must be >= 1, got {}", n));
  if (!(tol > 0.0)) throw DomainError(fmt::format("tolerance must be positive, got {}", tol));

  const double target = T / n;
  if (target <= quadrature::period_limit(q)) return std::nullopt;

  const double quad_tol = std::clamp(tol / 8.0, 1e-13, 1e-10);
  const auto integral = [&](double alpha) {
    return quadrature::period_integral(q, alpha, quad_tol).value;
  };

  const double limit = phase_plane::alpha_star(q);
  // I -> +inf as alpha -> 0: halve down until the integral exceeds the target.
  double lo = limit / 2.0;
  for (int i = 0; i < 200 && integral(lo) <= target; ++i) lo *= 0.5;
  // I -> pi/sqrt(q-2) < target as alpha -> alpha*: walk toward the limit
  // until the integral drops below the target. The walk stops short of the
  // oval degeneracy guard at alpha*(1 - 1e-12).
  double hi = 0.0;
  for (double eps = 1e-9; ; eps *= 0.1) {
    hi = limit * (1.0 - eps);
    if (integral(hi) < target) break;
    if (eps < 2e-11) {
      throw ConvergenceError(fmt::format(
          "period equation target {} is too close to the limiting period", target));
    }
  }

  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double value = integral(mid);
    if (std::abs(value - target) <= tol && hi - lo <= tol) return mid;
    if (value > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError(fmt::format(
      "alpha bisection for I_q = {} did not reach tolerance {}", target, tol));
}

PeriodicProfile reconstruct_profile(double q, double alpha, int n, double T,
                                    int grid_size) {
  require_problem(q, T);
  if (n < 1) throw DomainError(fmt::format("oscillation count must be >= 1, got {}", n));
  if (grid_size < 32) {
    throw DomainError(fmt::format("grid_size must be >= 32, got {}", grid_size));
  }

  const double mu = 2.0 / q;
  const double c1 = std::pow(q * alpha / 2.0, 2.0 / (q - 2.0));
  const double sqrt_c1 = std::sqrt(c1);
  const detail::OvalParam oval(phase_plane::oval_roots(q, alpha));

  // Cumulative arclength-in-x of the rising branch as a function of the
  // substitution angle; same integrand as the period integral.
  const auto speed = [&oval](double theta) {
    const auto p = oval.at(theta);
    return p.jacobian / std::sqrt(p.f);
  };
  const double target_half = T / n;
  auto table = detail::integrate_adaptive(speed, 0.0, pi / 2.0,
                                          1e-13 * std::max(1.0, target_half),
                                          quadrature::kEvaluationBudget, true);
  if (!table.converged) {
    throw ConvergenceError("profile parameterization quadrature did not converge");
  }
  const double half = table.value;
  std::vector<double> prefix(table.panels.size() + 1, 0.0);
  for (size_t i = 0; i < table.panels.size(); ++i) {
    prefix[i + 1] = prefix[i] + table.panels[i].value;
  }

  const double period_residual = std::abs(half - target_half) / target_half;
  if (period_residual > 1e-6) {
    throw ConsistencyError(fmt::format(
        "achieved oscillation period {:.12g} deviates from {:.12g} by {:.3g} relative; "
        "alpha does not solve the period equation",
        2.0 * half, 2.0 * target_half, period_residual));
  }

  // Inverts x(theta) = s for s in [0, half] by panel lookup plus Newton.
  const auto theta_of = [&](double s) {
    if (s <= 0.0) return 0.0;
    if (s >= half) return pi / 2.0;
    const size_t i =
        static_cast<size_t>(std::upper_bound(prefix.begin(), prefix.end(), s) -
                            prefix.begin()) - 1;
    const auto& panel = table.panels[std::min(i, table.panels.size() - 1)];
    double lo = panel.a, hi = panel.b;
    double theta = 0.5 * (lo + hi);
    const double base = prefix[std::min(i, table.panels.size() - 1)];
    for (int iter = 0; iter < 80; ++iter) {
      const double reached = base + detail::gauss7(speed, panel.a, theta);
      const double defect = reached - s;
      if (std::abs(defect) <= 1e-13 * std::max(1.0, half)) break;
      if (defect > 0.0) {
        hi = theta;
      } else {
        lo = theta;
      }
      const double w = speed(theta);
      double next = theta - defect / w;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - theta) <= 1e-16) break;
      theta = next;
    }
    return theta;
  };

  PeriodicProfile profile;
  profile.q = q;
  profile.alpha = alpha;
  profile.mu = mu;
  profile.c1 = c1;
  profile.T = T;
  profile.n = n;
  profile.min_y = sqrt_c1 * oval.x0;
  profile.max_y = sqrt_c1 * oval.x1;
  profile.period_residual = period_residual;

  const int N = grid_size;
  profile.x.resize(static_cast<size_t>(N) + 1);
  profile.y.resize(static_cast<size_t>(N) + 1);
  const double step = 2.0 * T / N;
  const double cycle = 2.0 * target_half;
  for (int j = 0; j <= N; ++j) {
    const double x = -T + step * j;
    double s = std::fmod(x + T, cycle);
    if (s > target_half) s = cycle - s;  // falling branch mirrors the rising one
    const double theta = theta_of(std::min(s, half));
    profile.x[static_cast<size_t>(j)] = x;
    profile.y[static_cast<size_t>(j)] = sqrt_c1 * oval.at(theta).t;
  }
  profile.y.back() = profile.y.front();

  // Measure the first integral on the emitted samples, not the parameterization.
  const size_t m = static_cast<size_t>(N);
  const std::span<const double> y(profile.y.data(), m);
  const auto dy = periodic_derivative(y, step);
  double worst = 0.0;
  for (size_t j = 0; j < m; ++j) {
    const double residual =
        dy[j] * dy[j] - (y[j] * y[j] - mu * std::pow(y[j], q) - c1);
    worst = std::max(worst, std::abs(residual));
  }
  profile.first_integral_residual =
      worst / std::max(1.0, profile.max_y * profile.max_y);
  return profile;
}

double rayleigh_quotient(const PeriodicProfile& profile) {
  const auto ints = profile_integrals(profile);
  return std::sqrt(ints.h1_sq) / std::pow(ints.lq_pow, 1.0 / profile.q);
}

double virial_residual(const PeriodicProfile& profile) {
  const auto ints = profile_integrals(profile);
  return std::abs(ints.h1_sq - ints.lq_pow) / ints.lq_pow;
}

}  // namespace sobemb::solutions
