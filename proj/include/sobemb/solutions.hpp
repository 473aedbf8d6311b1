#pragma once

// Nonconstant positive 2T-periodic solutions of -y'' + y = y^{q-1}:
// solving the period equation I_q(alpha) = T/n, counting nonequivalent
// solutions per the bifurcation band, and reconstructing sampled profiles
// with their invariants.

#include <optional>
#include <vector>

#include "sobemb/errors.hpp"

namespace sobemb::solutions {

/// A sampled nonconstant positive periodic solution over one period [-T, T],
/// anchored with its minimum at x = -T. mu = 2/q and c1 = (q alpha / 2)^{2/(q-2)}
/// are the Lagrange multiplier and first-integral constant of
/// y'^2 = y^2 - mu y^q - c1; n is the oscillation count per period.
struct PeriodicProfile {
  double q;
  double alpha;
  double mu;
  double c1;
  double T;
  int n;
  std::vector<double> x;  ///< uniform grid, x[j] = -T + 2T j / N, j = 0..N
  std::vector<double> y;
  double min_y;
  double max_y;
  double period_residual;          ///< |achieved half-oscillation - T/n| / (T/n)
  double first_integral_residual;  ///< max |y'^2 - (y^2 - mu y^q - c1)| / max(1, max y^2)
};

/// The band index k >= 1 with ((k-1)pi/T)^2 + 2 < q <= (k pi/T)^2 + 2,
/// i.e. k = ceil((T/pi) sqrt(q-2)). Throws DomainError for q <= 2 or T <= 0.
int band_index(double q, double T);

struct SolutionCount {
  int k;                       ///< total nonequivalent positive periodic solutions
  std::vector<int> solvable_n; ///< oscillation counts with T/n > pi/sqrt(q-2)
};

/// 1 (the constant solution) plus the number of n >= 1 with T/n above the
/// period-integral infimum; always equals band_index(q, T).
SolutionCount count_periodic_solutions(double q, double T);

/// The unique alpha in (0, alpha*) with |I_q(alpha) - T/n| <= tol, found by
/// bisection (uniqueness from strict monotonicity of I_q). Returns nullopt
/// when T/n <= pi/sqrt(q-2), where the period equation has no solution.
std::optional<double> solve_alpha_for_period(double q, double T, int n,
                                             double tol = 1e-10);

/// Builds the profile for a given (q, alpha, n, T) with alpha solving the
/// period equation. The rising branch is parameterized by the substitution
/// angle (never integrating through the turning points), then reflected and
/// periodized to n oscillations; samples on a uniform x-grid of grid_size
/// intervals. Throws ConsistencyError if the achieved oscillation period
/// deviates from 2T/n by more than 1e-6 relative.
PeriodicProfile reconstruct_profile(double q, double alpha, int n, double T,
                                    int grid_size = 4096);

/// ||y||_{H^1} / ||y||_{L_q} from the samples (derivative by high-order
/// periodic finite differences, integrals by the periodic trapezoid rule).
double rayleigh_quotient(const PeriodicProfile& profile);

/// Relative defect of the virial identity: |int(y'^2 + y^2) - int y^q| / int y^q.
double virial_residual(const PeriodicProfile& profile);

}  // namespace sobemb::solutions
