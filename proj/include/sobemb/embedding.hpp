#pragma once

// Norms and variational machinery for the periodic embedding H^r(-T,T) -> L_q(-T,T):
// the H^r norm on Fourier data, grid L_q norms, the functional
// J(y) = ||y||_{H^r}^2 - (2T)^{1-2/q} ||y||_{L_q}^2, the second-variation
// quadratic form at the constant, the periodic eigenvalue formula, the
// Steklov-Wirtinger half-period reduction, and the sharp-constant decision.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <span>
#include <vector>

#include "sobemb/errors.hpp"

namespace sobemb::embedding {

/// The (q, r, T) triple of the embedding problem. T is the half-period.
struct EmbeddingParams {
  double q;
  double r;
  double T;
};

/// q may not exceed this for the constant to stay a local minimizer.
inline double bifurcation_threshold(double r, double T);

/// A real 2T-periodic trigonometric polynomial stored as amplitudes with
/// respect to the orthonormal exponential system e_k(x) = exp(i pi k x / T)/sqrt(2T).
/// Hermitian symmetry (real values) is maintained by construction, so
/// ||y||_{L2}^2 = sum |amp_k|^2 and the constant c has hr_norm_sq = 2T c^2.
class FourierFunction {
public:
  explicit FourierFunction(double half_period);

  static FourierFunction constant(double value, double half_period);
  static FourierFunction cosine(int k, double amplitude, double half_period);

  /// Adds amplitude * cos(k pi x / T) (k >= 0) or amplitude * sin(k pi x / T) (k >= 1).
  void add_cosine(int k, double amplitude);
  void add_sine(int k, double amplitude);

  double half_period() const { return half_period_; }
  const std::map<int, std::complex<double>>& modes() const { return modes_; }
  int max_mode() const;

  double mean() const;
  FourierFunction mean_zero() const;

  double evaluate(double x) const;
  /// Samples on the uniform periodic grid x_j = -T + 2T j / n, j = 0..n-1.
  std::vector<double> sample(int n) const;

private:
  double half_period_;
  std::map<int, std::complex<double>> modes_;
};

/// ||y||_{H^r}^2 = sum_k |amp_k|^2 ((pi |k| / T)^{2r} + 1).
double hr_norm_sq(const FourierFunction& y, double r);

/// (integral of |y|^q)^{1/q} by the periodic trapezoid rule on uniform samples.
/// Throws DomainError for q < 1 or fewer than 16 samples.
double lq_norm(std::span<const double> samples, double q, double half_period);
double lq_norm(const FourierFunction& y, double q, int grid_size = 4096);

/// J(y) = ||y||_{H^r}^2 - (2T)^{1-2/q} ||y||_{L_q}^2; vanishes on constants.
double functional_j(const FourierFunction& y, double q, double r, int grid_size = 4096);

/// Half the second derivative of J at the constant, evaluated on h:
/// ||h1||_{H^r}^2 - (q-1)||h1||_{L2}^2 with h1 the mean-zero part of h.
double second_variation_form(const FourierFunction& h, double q, double r);

/// Smallest eigenvalue of (-d^2/dx^2)^r - (q-2) on mean-zero periodic
/// functions: (pi/T)^{2r} - (q-2).
double smallest_eigenvalue(double q, double r, double T);

/// Half-period T1 = T (T/pi)^{r-1} of the reduced r = 1 problem, so that
/// (pi/T1)^2 = (pi/T)^{2r}. Throws DomainError for r < 1.
double steklov_reduce(double r, double T);

enum class ConstantStatus {
  exact_constant_minimizer,
  constant_not_minimizer_upper_bound,
  below_threshold_q_le_2,
};

const char* to_string(ConstantStatus status);

struct SharpConstantResult {
  double value;
  ConstantStatus status;
};

/// The sharp constant lambda_{q,r}(T), or an upper bound for it:
///  - q <= 2: (2T)^{1/2-1/q}, attained by the constant.
///  - 2 < q <= (pi/T)^{2r} + 2 with r >= 1: (2T)^{1/2-1/q}, attained by the constant.
///  - q above the threshold: the constant is not a minimizer; returns the best
///    Rayleigh quotient among the reconstructed nonconstant extremals when
///    r = 1 (an upper bound), and the constant's quotient flagged as an upper
///    bound when r > 1.
/// Throws DomainError for r < 1 with q > 2 (uncovered regime) or nonpositive q, T.
SharpConstantResult sharp_constant(const EmbeddingParams& params);

inline double bifurcation_threshold(double r, double T) {
  return std::pow(std::numbers::pi / T, 2.0 * r) + 2.0;
}

}  // namespace sobemb::embedding
