#include "sobemb/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "sobemb/solutions.hpp"

namespace sobemb::embedding {

namespace {

using std::numbers::pi;

void require_half_period(double T) {
  if (!(T > 0.0)) {
    throw DomainError(fmt::format("half-period must be positive, got {}", T));
  }
}

}  // namespace

FourierFunction::FourierFunction(double half_period) : half_period_(half_period) {
  require_half_period(half_period);
}

FourierFunction FourierFunction::constant(double value, double half_period) {
  FourierFunction y(half_period);
  y.add_cosine(0, value);
  return y;
}

FourierFunction FourierFunction::cosine(int k, double amplitude, double half_period) {
  FourierFunction y(half_period);
  y.add_cosine(k, amplitude);
  return y;
}

void FourierFunction::add_cosine(int k, double amplitude) {
  if (k < 0) throw DomainError("add_cosine requires k >= 0");
  const double scale = std::sqrt(2.0 * half_period_);
  if (k == 0) {
    modes_[0] += amplitude * scale;
  } else {
    modes_[k] += amplitude * scale / 2.0;
    modes_[-k] += amplitude * scale / 2.0;
  }
  // Drop exact zeros so max_mode() stays meaningful.
  for (int mode : {k, -k}) {
    auto it = modes_.find(mode);
    if (it != modes_.end() && it->second == std::complex<double>(0.0)) {
      modes_.erase(it);
    }
  }
}

void FourierFunction::add_sine(int k, double amplitude) {
  if (k < 1) throw DomainError("add_sine requires k >= 1");
  const double scale = std::sqrt(2.0 * half_period_);
  const std::complex<double> coeff(0.0, -amplitude * scale / 2.0);
  modes_[k] += coeff;
  modes_[-k] += std::conj(coeff);
}

int FourierFunction::max_mode() const {
  int top = 0;
  for (const auto& [k, amp] : modes_) top = std::max(top, std::abs(k));
  return top;
}

double FourierFunction::mean() const {
  auto it = modes_.find(0);
  if (it == modes_.end()) return 0.0;
  return it->second.real() / std::sqrt(2.0 * half_period_);
}

FourierFunction FourierFunction::mean_zero() const {
  FourierFunction out = *this;
  out.modes_.erase(0);
  return out;
}

double FourierFunction::evaluate(double x) const {
  const double scale = 1.0 / std::sqrt(2.0 * half_period_);
  double value = 0.0;
  for (const auto& [k, amp] : modes_) {
    if (k < 0) continue;  // Hermitian partner folded below
    if (k == 0) {
      value += amp.real() * scale;
    } else {
      const double phase = pi * k * x / half_period_;
      value += 2.0 * scale *
               (amp.real() * std::cos(phase) - amp.imag() * std::sin(phase));
    }
  }
  return value;
}

std::vector<double> FourierFunction::sample(int n) const {
  if (n < 1) throw DomainError("sample requires n >= 1");
  std::vector<double> values(static_cast<size_t>(n));
  const double step = 2.0 * half_period_ / n;
  for (int j = 0; j < n; ++j) {
    values[static_cast<size_t>(j)] = evaluate(-half_period_ + step * j);
  }
  return values;
}

double hr_norm_sq(const FourierFunction& y, double r) {
  const double T = y.half_period();
  double sum = 0.0;
  for (const auto& [k, amp] : y.modes()) {
    const double weight = std::pow(pi * std::abs(k) / T, 2.0 * r) + 1.0;
    sum += std::norm(amp) * weight;
  }
  return sum;
}

double lq_norm(std::span<const double> samples, double q, double half_period) {
  if (!(q >= 1.0)) {
    throw DomainError(fmt::format("lq_norm requires q >= 1, got {}", q));
  }
  if (samples.size() < 16) {
    throw DomainError(fmt::format("lq_norm requires >= 16 samples, got {}",
                                  samples.size()));
  }
  require_half_period(half_period);
  double sum = 0.0;
  for (double v : samples) sum += std::pow(std::abs(v), q);
  sum *= 2.0 * half_period / static_cast<double>(samples.size());
  return std::pow(sum, 1.0 / q);
}

double lq_norm(const FourierFunction& y, double q, int grid_size) {
  return lq_norm(y.sample(grid_size), q, y.half_period());
}

double functional_j(const FourierFunction& y, double q, double r, int grid_size) {
  const double T = y.half_period();
  const double norm_lq = lq_norm(y, q, grid_size);
  return hr_norm_sq(y, r) - std::pow(2.0 * T, 1.0 - 2.0 / q) * norm_lq * norm_lq;
}

double second_variation_form(const FourierFunction& h, double q, double r) {
  const double T = h.half_period();
  double sum = 0.0;
  for (const auto& [k, amp] : h.modes()) {
    if (k == 0) continue;
    sum += std::norm(amp) * (std::pow(pi * std::abs(k) / T, 2.0 * r) + 2.0 - q);
  }
  return sum;
}

double smallest_eigenvalue(double q, double r, double T) {
  require_half_period(T);
  return std::pow(pi / T, 2.0 * r) - (q - 2.0);
}

double steklov_reduce(double r, double T) {
  if (!(r >= 1.0)) {
    throw DomainError(fmt::format("steklov_reduce requires r >= 1, got {}", r));
  }
  require_half_period(T);
  return T * std::pow(T / pi, r - 1.0);
}

const char* to_string(ConstantStatus status) {
  switch (status) {
    case ConstantStatus::exact_constant_minimizer:
      return "exact_constant_minimizer";
    case ConstantStatus::constant_not_minimizer_upper_bound:
      return "constant_not_minimizer_upper_bound";
    case ConstantStatus::below_threshold_q_le_2:
      return "below_threshold_q_le_2";
  }
  return "unknown";
}

SharpConstantResult sharp_constant(const EmbeddingParams& params) {
  const auto [q, r, T] = params;
  require_half_period(T);
  if (!(q > 0.0) || !(r > 0.0)) {
    throw DomainError(fmt::format("sharp_constant requires q, r > 0, got q = {}, r = {}", q, r));
  }
  const double constant_value = std::pow(2.0 * T, 0.5 - 1.0 / q);
  if (q <= 2.0) {
    return {constant_value, ConstantStatus::below_threshold_q_le_2};
  }
  if (r < 1.0) {
    throw DomainError(fmt::format(
        "sharp_constant with 2 < q and r = {} < 1 is outside the proven range", r));
  }
  if (q <= bifurcation_threshold(r, T)) {
    return {constant_value, ConstantStatus::exact_constant_minimizer};
  }
  double best = constant_value;
  if (r == 1.0) {
    // Every solvable oscillation count yields a nonconstant candidate.
    const auto count = solutions::count_periodic_solutions(q, T);
    for (int n : count.solvable_n) {
      const auto alpha = solutions::solve_alpha_for_period(q, T, n);
      if (!alpha) continue;
      const auto profile = solutions::reconstruct_profile(q, *alpha, n, T);
      best = std::min(best, solutions::rayleigh_quotient(profile));
    }
  }
  return {best, ConstantStatus::constant_not_minimizer_upper_bound};
}

}  // namespace sobemb::embedding
