#include "sobemb/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <optional>
#include <utility>

#include "sobemb/phase_plane.hpp"
#include "sobemb/quadrature.hpp"

namespace sobemb::certify {

namespace {

namespace pp = sobemb::phase_plane;
namespace quad = sobemb::quadrature;

constexpr std::array<std::pair<double, double>, 8> kChain = {{
    {1.15, 0.897},
    {1.157, 0.894},
    {1.166, 0.890},
    {1.177, 0.885},
    {1.194, 0.878},
    {1.221, 0.868},
    {1.271, 0.851},
    {1.438, 0.815},
}};

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> values(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    values[static_cast<size_t>(i)] =
        (count == 1) ? lo : lo + (hi - lo) * i / (count - 1);
  }
  return values;
}

/// Collects signed slacks; the certificate passes iff every slack is positive.
class SlackCollector {
public:
  void note(std::string label, std::vector<double> point, double slack,
            double value) {
    if (slack < margin_) {
      margin_ = slack;
      extremal_ = Witness{std::move(label), std::move(point), value};
      return;
    }
    if (slack <= 0.0 && failures_ < 15) {
      ++failures_;
      extra_failures_.push_back(Witness{std::move(label), std::move(point), value});
    }
  }

  CertificateReport finish(std::string name, std::string grid_spec) const {
    CertificateReport report;
    report.name = std::move(name);
    report.margin = margin_;
    report.passed = margin_ > 0.0;
    report.grid_spec = std::move(grid_spec);
    if (extremal_) report.witnesses.push_back(*extremal_);
    for (const auto& w : extra_failures_) {
      if (w.label != extremal_->label || w.point != extremal_->point) {
        report.witnesses.push_back(w);
      }
    }
    return report;
  }

  double margin() const { return margin_; }

private:
  double margin_ = std::numeric_limits<double>::infinity();
  std::optional<Witness> extremal_;
  std::vector<Witness> extra_failures_;
  int failures_ = 0;
};

double g_prime(const pp::Oval& oval, double t) {
  const double g1 = pp::g_family_eval(oval, t, pp::GKind::g1);
  return pp::psi_eval(oval, t) * std::pow(t, 2.0 - oval.q) * g1;
}

/// Counts strict sign changes of g1 over [lo, hi], refining cells whose
/// bracketing values are smaller than 1e-12 in magnitude. Resolution floor
/// 1e-6 * span; beyond 12 refinement levels the count is inconclusive.
int count_g1_crossings(const pp::Oval& oval, int scan_points) {
  const auto g1 = [&](double t) {
    return pp::g_family_eval(oval, t, pp::GKind::g1);
  };
  const double span = oval.width();
  const double floor_width = 1e-6 * span;

  struct Cell {
    double lo, hi, f_lo, f_hi;
    int depth;
  };
  std::vector<Cell> stack;
  const auto ts = linspace(oval.x0, oval.x1, scan_points);
  double prev_t = ts[0];
  double prev_v = g1(prev_t);
  for (size_t i = 1; i < ts.size(); ++i) {
    const double v = g1(ts[i]);
    stack.push_back({prev_t, ts[i], prev_v, v, 0});
    prev_t = ts[i];
    prev_v = v;
  }

  int crossings = 0;
  while (!stack.empty()) {
    const Cell cell = stack.back();
    stack.pop_back();
    const bool tiny_ends =
        std::abs(cell.f_lo) <= 1e-12 || std::abs(cell.f_hi) <= 1e-12;
    const bool sign_change = cell.f_lo * cell.f_hi < 0.0;
    if (!sign_change && !tiny_ends) continue;
    if (sign_change && !tiny_ends && cell.hi - cell.lo <= floor_width) {
      ++crossings;
      continue;
    }
    if (sign_change && !tiny_ends && cell.depth >= 3) {
      // Isolated crossing with solid brackets: no further refinement needed.
      ++crossings;
      continue;
    }
    if (cell.depth >= 12 || cell.hi - cell.lo <= floor_width) {
      throw InconclusiveError(fmt::format(
          "sign change of g1 near t = {:.9g} could not be isolated at "
          "resolution {:.3g} (q = {}, alpha = {})",
          0.5 * (cell.lo + cell.hi), floor_width, oval.q, oval.alpha));
    }
    const double mid = 0.5 * (cell.lo + cell.hi);
    const double f_mid = g1(mid);
    stack.push_back({cell.lo, mid, cell.f_lo, f_mid, cell.depth + 1});
    stack.push_back({mid, cell.hi, f_mid, cell.f_hi, cell.depth + 1});
  }
  return crossings;
}

CertificateReport merge(std::string name, std::string grid_spec,
                        const std::vector<CertificateReport>& parts) {
  CertificateReport merged;
  merged.name = std::move(name);
  merged.grid_spec = std::move(grid_spec);
  merged.passed = true;
  merged.margin = std::numeric_limits<double>::infinity();
  const CertificateReport* worst = nullptr;
  for (const auto& part : parts) {
    merged.passed = merged.passed && part.passed;
    if (part.margin < merged.margin) {
      merged.margin = part.margin;
      worst = &part;
    }
  }
  if (worst) merged.witnesses = worst->witnesses;
  return merged;
}

}  // namespace

std::span<const std::pair<double, double>> chain_checkpoints() {
  return kChain;
}

CertificateReport certify_main_lemma(std::span<const double> q_grid,
                                     int alpha_density) {
  if (alpha_density < 2) throw DomainError("alpha_density must be >= 2");
  SlackCollector slacks;
  for (double q : q_grid) {
    if (!(q > 2.0)) throw DomainError(fmt::format("main lemma grid requires q > 2, got {}", q));
    const double limit_alpha = pp::alpha_star(q);
    const double limit_period = quad::period_limit(q);
    for (double frac : linspace(0.01, 0.999, alpha_density)) {
      const double alpha = frac * limit_alpha;
      const auto deriv = quad::period_integral_deriv(q, alpha, 1e-9);
      slacks.note("dI/dalpha < 0", {q, alpha}, -deriv.value, deriv.value);
      const auto integral = quad::period_integral(q, alpha, 1e-9);
      slacks.note("I > pi/sqrt(q-2)", {q, alpha}, integral.value - limit_period,
                  integral.value);
    }
    if (q > 4.0) {
      // The duality identity maps q > 4 into (2, 4], where the direct
      // checks above already ran; confirm the map itself.
      for (double frac : {0.2, 0.5, 0.8}) {
        const double alpha = frac * limit_alpha;
        const double residual = quad::duality_residual(q, alpha, 1e-10);
        slacks.note("duality residual <= 1e-8", {q, alpha}, 1e-8 - residual,
                    residual);
      }
    }
  }
  return slacks.finish(
      "main_lemma",
      fmt::format("{} q values x {} alpha points in (0.01, 0.999) alpha*",
                  q_grid.size(), alpha_density));
}

CertificateReport certify_main_lemma_default(int density) {
  const std::array<double, 5> q_grid = {2.2, 2.5, 3.0, 3.5, 4.0};
  return certify_main_lemma(q_grid, 50 * std::max(1, density));
}

CertificateReport certify_lemma22(double q, double alpha, int scan_density) {
  if (!(q > 2.0)) throw DomainError(fmt::format("certify_lemma22 requires q > 2, got {}", q));
  const auto oval = pp::oval_roots(q, alpha);
  SlackCollector slacks;
  std::string spec;
  if (q > 3.0) {
    slacks.note("g'(x0) < 0", {q, alpha, oval.x0}, -g_prime(oval, oval.x0),
                g_prime(oval, oval.x0));
    slacks.note("g'(xhat) > 0", {q, alpha, oval.xhat}, g_prime(oval, oval.xhat),
                g_prime(oval, oval.xhat));
    slacks.note("g'(x1) < 0", {q, alpha, oval.x1}, -g_prime(oval, oval.x1),
                g_prime(oval, oval.x1));
    const int crossings = count_g1_crossings(oval, 800 * std::max(1, scan_density));
    if (crossings != 2) {
      slacks.note("exactly two sign changes of g1", {q, alpha}, -1.0, crossings);
    }
    spec = fmt::format("endpoint signs + crossing scan at {} points",
                       800 * std::max(1, scan_density));
  } else {
    // q <= 3: psi increases and t^{3-q} does not decrease, so g increases.
    const auto ts = linspace(oval.x0, oval.x1, 800 * std::max(1, scan_density));
    for (size_t i = 1; i + 1 < ts.size(); ++i) {
      slacks.note("g' > 0 (monotone branch)", {q, alpha, ts[i]},
                  g_prime(oval, ts[i]), g_prime(oval, ts[i]));
    }
    spec = fmt::format("monotone branch, {} interior points",
                       800 * std::max(1, scan_density) - 2);
  }
  return slacks.finish(fmt::format("lemma22(q={}, alpha={})", q, alpha), spec);
}

CertificateReport certify_lemma22_default(int density) {
  std::vector<CertificateReport> parts;
  for (double q : linspace(3.1, 4.0, 7)) {
    for (double frac : linspace(0.05, 0.95, 7)) {
      parts.push_back(certify_lemma22(q, frac * pp::alpha_star(q), density));
    }
  }
  for (double q : linspace(2.2, 3.0, 5)) {
    for (double frac : linspace(0.05, 0.95, 7)) {
      parts.push_back(certify_lemma22(q, frac * pp::alpha_star(q), density));
    }
  }
  return merge("lemma22_default_grid",
               "q in lin(3.1,4,7) and lin(2.2,3,5), alpha/alpha* in lin(0.05,0.95,7)",
               parts);
}

CertificateReport certify_lemma23(double q, double alpha) {
  if (!(q >= 3.0 && q <= 4.0)) {
    throw DomainError(fmt::format("certify_lemma23 requires 3 <= q <= 4, got {}", q));
  }
  const auto oval = pp::oval_roots(q, alpha);
  const double g_x0 = pp::g_family_eval(oval, oval.x0, pp::GKind::g);
  const double g_xhat = pp::g_family_eval(oval, oval.xhat, pp::GKind::g);
  const double g_x1 = pp::g_family_eval(oval, oval.x1, pp::GKind::g);
  SlackCollector slacks;
  slacks.note("g(x0) < g(xhat)", {q, alpha}, g_xhat - g_x0, g_xhat - g_x0);
  slacks.note("g(xhat) < g(x1)", {q, alpha}, g_x1 - g_xhat, g_x1 - g_xhat);
  return slacks.finish(fmt::format("lemma23(q={}, alpha={})", q, alpha),
                       "two strict orderings at one (q, alpha)");
}

CertificateReport certify_lemma23_default(int density) {
  const int nq = 20 * std::max(1, density);
  const int na = 20 * std::max(1, density);
  std::vector<CertificateReport> parts;
  for (double q : linspace(3.0, 4.0, nq)) {
    for (double frac : linspace(0.05, 0.99, na)) {
      parts.push_back(certify_lemma23(q, frac * pp::alpha_star(q)));
    }
  }
  return merge("lemma23_default_grid",
               fmt::format("{}x{} grid over [3,4] x [0.05,0.99] alpha*", nq, na),
               parts);
}

CertificateReport certify_polynomials(int density) {
  const int d = std::max(1, density);
  SlackCollector slacks;

  // (a) the quotient denominator z^2 (5 z^4 (q^2-4q-21) - (4z^2+1)(q^2-1))
  // is negative on z >= 1, 3 <= q <= 4.
  for (double q : linspace(3.0, 4.0, 21 * d)) {
    for (double z : linspace(1.0, 20.0, 40 * d)) {
      const double z2 = z * z;
      const double denom =
          z2 * (5.0 * z2 * z2 * (q * q - 4.0 * q - 21.0) -
                (4.0 * z2 + 1.0) * (q * q - 1.0));
      slacks.note("quotient denominator < 0", {z, q}, -denom, denom);
    }
  }

  // (b) P(1, q) > 0 and P strictly decreasing along z.
  for (double q : linspace(3.0, 4.0, 21 * d)) {
    slacks.note("P(1, q) > 0", {1.0, q}, pp::poly_p(1.0, q), pp::poly_p(1.0, q));
    const auto zs = linspace(1.0, 20.0, 60 * d);
    for (size_t i = 0; i + 1 < zs.size(); ++i) {
      const double drop = pp::poly_p(zs[i], q) - pp::poly_p(zs[i + 1], q);
      slacks.note("P decreasing in z", {zs[i], q}, drop, drop);
    }
  }

  // (c) the three consistent printed factorizations, rel. 1e-5.
  const auto rel_slack = [](double expanded, double factored) {
    return 1e-5 - std::abs(expanded - factored) / std::max(1.0, std::abs(expanded));
  };
  for (double q : linspace(3.0, 4.0, 25 * d)) {
    const double factored = 1.16747016 * (q + 5.796999289) * (q - 4.076622243) *
                            (q - 8.501415029);
    slacks.note("P(1.15, q) factorization", {1.15, q},
                rel_slack(pp::poly_p(1.15, q), factored), factored);
  }
  for (double z : linspace(1.0, 3.0, 25 * d)) {
    const double fac0 = 6.582844536 * (z + 1.157682736) * (z - 1.157682736) *
                        (z * z + 1.636399020 * z + 1.166257009) *
                        (z * z - 1.636399020 * z + 1.166257009);
    slacks.note("Q(z, 3, 0.897) factorization", {z},
                rel_slack(pp::poly_q(z, 3.0, 0.897), fac0), fac0);
    const double fac1 = 6.274166280 * (z + 1.166008256) * (z - 1.166008256) *
                        (z * z + 1.656562646 * z + 1.186071814) *
                        (z * z - 1.656562646 * z + 1.186071814);
    slacks.note("Q(z, 3, 0.894) factorization", {z},
                rel_slack(pp::poly_q(z, 3.0, 0.894), fac1), fac1);
  }

  // (d) dQ/dq at q = 4 equals its closed form; the closed form is <= 0 for
  // z <= 3; Q is convex in q (so q = 4 maximizes dQ/dq on [3, 4]).
  for (double tau : linspace(0.80, 0.95, 7 * d)) {
    for (double z : linspace(1.0, 3.0, 25 * d)) {
      const double analytic = pp::poly_q_dq(z, 4.0, tau);
      const double closed = pp::poly_q_dq_at_q4(z, tau);
      slacks.note("dQ/dq(q=4) closed form", {z, tau},
                  1e-10 - std::abs(analytic - closed) /
                              std::max(1.0, std::abs(closed)),
                  analytic);
      slacks.note("dQ/dq(q=4) <= 0 for z <= 3", {z, tau}, -closed, closed);
      for (double q : linspace(3.0, 3.75, 4)) {
        const double gap = closed - pp::poly_q_dq(z, q, tau);
        // 2(z^2-1)^3 >= 0 integrates to a nonnegative gap; strict for z > 1.
        if (z > 1.0) {
          slacks.note("Q convex in q", {z, q, tau}, gap, gap);
        }
      }
    }
  }

  // (e) the tail polynomial Q(z, 3, tau7) is negative on [1, 20] and keeps
  // a negative leading coefficient beyond.
  const double tau7 = kChain.back().second;
  for (double z : linspace(1.0, 20.0, 100 * d)) {
    const double value = pp::poly_q(z, 3.0, tau7);
    slacks.note("Q(z, 3, tau7) < 0", {z}, -value, value);
  }
  const double leading = 32.0 * std::pow(tau7, 5.0) - 12.0;
  slacks.note("leading coefficient of Q(., 3, tau7) < 0", {tau7}, -leading,
              leading);

  return slacks.finish(
      "polynomials",
      fmt::format("density {} grids over z in [1,20], q in [3,4], tau in [0.8,0.95]", d));
}

CertificateReport certify_chain(int density) {
  const int d = std::max(1, density);
  SlackCollector slacks;
  for (size_t k = 0; k + 1 < kChain.size(); ++k) {
    const auto [z_k, tau_k] = kChain[k];
    const auto [z_next, tau_next] = kChain[k + 1];
    const std::string step = fmt::format("step {}", k);

    const double tau_value = pp::tau_eval(z_k, 4.0);
    slacks.note(step + ": tau(z_k, 4) < tau_k", {z_k, 4.0}, tau_k - tau_value,
                tau_value);

    for (double z : linspace(z_k, z_next, 200 * d)) {
      const double value = pp::poly_q(z, 3.0, tau_k);
      slacks.note(step + ": Q(z, 3, tau_k) < 0", {z}, -value, value);
      const double guard = pp::poly_q_dq_at_q4(z, tau_k);
      slacks.note(step + ": dQ/dq guard < 0", {z}, -guard, guard);
      for (double q : {3.0, 3.5, 4.0}) {
        const double dq = pp::poly_q_dq(z, q, tau_k);
        slacks.note(step + ": Q decreasing in q", {z, q}, -dq, dq);
      }
    }
  }
  // Tail beyond the last checkpoint: tau7 controls all larger z.
  const auto [z_last, tau7] = kChain.back();
  for (double z : linspace(z_last, 20.0, 200 * d)) {
    const double value = pp::poly_q(z, 3.0, tau7);
    slacks.note("tail: Q(z, 3, tau7) < 0", {z}, -value, value);
    const double guard = pp::poly_q_dq_at_q4(z, tau7);
    slacks.note("tail: dQ/dq guard < 0", {z}, -guard, guard);
  }
  const double leading_q = 32.0 * std::pow(tau7, 5.0) - 12.0;
  slacks.note("tail: leading coefficient of Q < 0", {tau7}, -leading_q, leading_q);
  const double leading_dq = 1.0 - 8.0 * std::pow(tau7, 5.0);
  slacks.note("tail: leading coefficient of dQ/dq(q=4) < 0", {tau7}, -leading_dq,
              leading_dq);
  return slacks.finish(
      "chain", fmt::format("7 steps + tail, {} z points per segment", 200 * d));
}

}  // namespace sobemb::certify
