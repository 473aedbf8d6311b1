#pragma once

// Internal adaptive quadrature: 15-point Kronrod rule with embedded 7-point
// Gauss rule for the error estimate, worst-panel-first subdivision, and a
// tanh-sinh rule as the fallback integrator. Header is private to src/.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace sobemb::detail {

// QUADPACK dqk15 abscissae/weights on [-1, 1]; Gauss points are the odd-index
// Kronrod abscissae.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelEstimate {
  double value = 0.0;
  double error = 0.0;
};

/// Plain 7-point Gauss-Legendre on [a, b]; no error estimate.
template <class F>
double gauss7(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = kGaussWeights[3] * f(center);
  for (int i = 0; i < 3; ++i) {
    const double dx = half * kKronrodNodes[2 * i + 1];
    sum += kGaussWeights[i] * (f(center - dx) + f(center + dx));
  }
  return sum * half;
}

template <class F>
PanelEstimate kronrod15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  return {kronrod * half, std::abs(kronrod - gauss) * half};
}

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = false;
  std::vector<Panel> panels;  ///< ordered by left endpoint when requested
};

template <class F>
AdaptiveResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                  long max_evaluations, bool keep_panels = false,
                                  int initial_panels = 8) {
  AdaptiveResult result;
  std::priority_queue<Panel> queue;
  double total = 0.0, total_err = 0.0;
  const double h = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == initial_panels) ? b : a + (i + 1) * h;
    const PanelEstimate est = kronrod15(f, lo, hi);
    result.evaluations += 15;
    total += est.value;
    total_err += est.error;
    queue.push({lo, hi, est.value, est.error});
  }
  while (total_err > abs_tol && result.evaluations + 30 <= max_evaluations) {
    const Panel worst = queue.top();
    // Panel shrunk to rounding width; further splitting cannot help.
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;
    queue.pop();
    total -= worst.value;
    total_err -= worst.error;
    for (const auto& [lo, hi] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
      const PanelEstimate est = kronrod15(f, lo, hi);
      result.evaluations += 15;
      total += est.value;
      total_err += est.error;
      queue.push({lo, hi, est.value, est.error});
    }
  }
  result.value = total;
  result.error = total_err;
  result.converged = total_err <= abs_tol;
  if (keep_panels) {
    result.panels.reserve(queue.size());
    while (!queue.empty()) {
      result.panels.push_back(queue.top());
      queue.pop();
    }
    std::sort(result.panels.begin(), result.panels.end(),
              [](const Panel& lhs, const Panel& rhs) { return lhs.a < rhs.a; });
  }
  return result;
}

// tanh-sinh on a finite interval; assumes the integrand is bounded there.
// Doubles the node density per level until two refinements agree.
template <class F>
AdaptiveResult tanh_sinh(F&& f, double a, double b, double abs_tol,
                         long max_evaluations) {
  constexpr double kHalfPi = 1.5707963267948966;
  constexpr double kCutoff = 3.7;  // |u| where the weight underflows usefulness
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const auto node = [&](double u, double& x, double& w) {
    const double s = kHalfPi * std::sinh(u);
    const double t = std::tanh(s);
    x = center + half * t;
    const double c = std::cosh(s);
    w = half * kHalfPi * std::cosh(u) / (c * c);
  };

  AdaptiveResult result;
  double x, w;
  node(0.0, x, w);
  double sum = f(x) * w;
  ++result.evaluations;
  for (double u = 1.0; u <= kCutoff; u += 1.0) {
    for (double su : {u, -u}) {
      node(su, x, w);
      if (x <= a || x >= b) continue;
      sum += f(x) * w;
      ++result.evaluations;
    }
  }
  double h = 1.0;
  double previous = sum * h;
  for (int level = 1; level <= 14; ++level) {
    h *= 0.5;
    // New nodes sit at the odd multiples of the refined spacing.
    for (double u = h; u <= kCutoff; u += 2.0 * h) {
      for (double su : {u, -u}) {
        node(su, x, w);
        if (x <= a || x >= b) continue;
        sum += f(x) * w;
        ++result.evaluations;
      }
    }
    const double estimate = sum * h;
    const double diff = std::abs(estimate - previous);
    result.value = estimate;
    result.error = diff;
    if (level > 1 && diff <= abs_tol) {
      result.converged = true;
      return result;
    }
    if (result.evaluations >= max_evaluations) break;
    previous = estimate;
  }
  return result;
}

}  // namespace sobemb::detail
