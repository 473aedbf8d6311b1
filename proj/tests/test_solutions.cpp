#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "sobemb/quadrature.hpp"
#include "sobemb/solutions.hpp"

using namespace sobemb;
using namespace sobemb::solutions;
using std::numbers::pi;

namespace {

// Test-side oracle: bisect the q = 4 closed form (AGM elliptic integral),
// independent of the adaptive quadrature path used by the solver.
double alpha_from_oracle_q4(double target) {
  double lo = 1e-6, hi = 0.25 - 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (quadrature::elliptic_oracle_q4(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("band index") {
  CHECK(band_index(4.0, pi) == 2);
  CHECK(band_index(6.0, pi) == 2);  // right-closed boundary: 3 < 6 <= 6
  CHECK(band_index(6.0 + 1e-9, pi) == 3);
  CHECK(band_index(2.1, 0.1) == 1);
  CHECK(band_index(4.0, 2.0 * pi) == 3);
  CHECK_THROWS_AS(band_index(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(band_index(4.0, 0.0), DomainError);
}

TEST_CASE("solution counts") {
  const auto c1 = count_periodic_solutions(4.0, pi);
  CHECK(c1.k == 2);
  CHECK(c1.solvable_n == std::vector<int>{1});
  const auto c2 = count_periodic_solutions(4.0, 2.0 * pi);
  CHECK(c2.k == 3);
  CHECK(c2.solvable_n == std::vector<int>{1, 2});
  const auto c3 = count_periodic_solutions(3.0, pi);
  CHECK(c3.k == 1);
  CHECK(c3.solvable_n.empty());
}

TEST_CASE("count equals band index across a grid") {
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double q = 2.0 + 4.0 * (i + 1) / 20.0;
      const double T = 0.5 + 7.5 * j / 9.0;
      const auto count = count_periodic_solutions(q, T);
      CHECK(count.k == band_index(q, T));
      CHECK(static_cast<int>(count.solvable_n.size()) == count.k - 1);
      // every listed n is strictly solvable; n = k is not
      for (int n : count.solvable_n) {
        CHECK(T / n > quadrature::period_limit(q));
      }
      CHECK(T / count.k <= quadrature::period_limit(q) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("alpha solving the period equation at q = 4") {
  const auto alpha = solve_alpha_for_period(4.0, pi, 1, 1e-10);
  REQUIRE(alpha.has_value());
  CHECK(*alpha == doctest::Approx(0.0322).epsilon(1e-3 / 0.0322));
  CHECK(*alpha == doctest::Approx(alpha_from_oracle_q4(pi)).epsilon(1e-7));
  // residual within tolerance and sign flip around the root
  const double target = pi;
  const double residual = quadrature::period_integral(4.0, *alpha).value - target;
  CHECK(std::abs(residual) <= 1e-10);
  const double step = 10.0 * 1e-10;
  const double left = quadrature::period_integral(4.0, *alpha - step).value - target;
  const double right = quadrature::period_integral(4.0, *alpha + step).value - target;
  CHECK(left > 0.0);
  CHECK(right < 0.0);
}

TEST_CASE("unsolvable period equations return nothing") {
  CHECK_FALSE(solve_alpha_for_period(4.0, pi, 2).has_value());  // pi/2 < pi/sqrt(2)
  CHECK_FALSE(solve_alpha_for_period(3.0, pi, 1).has_value());  // boundary, never attained
  CHECK_FALSE(solve_alpha_for_period(2.5, 1.0, 1).has_value());
  CHECK_THROWS_AS(solve_alpha_for_period(2.0, pi, 1), DomainError);
  CHECK_THROWS_AS(solve_alpha_for_period(4.0, pi, 0), DomainError);
  CHECK_THROWS_AS(solve_alpha_for_period(4.0, pi, 1, -1.0), DomainError);
}

TEST_CASE("profile reconstruction for (q=4, T=pi, n=1)") {
  const auto alpha = solve_alpha_for_period(4.0, pi, 1, 1e-11);
  REQUIRE(alpha.has_value());
  const auto profile = reconstruct_profile(4.0, *alpha, 1, pi);
  CHECK(profile.mu == doctest::Approx(0.5));
  CHECK(profile.c1 == doctest::Approx(2.0 * *alpha).epsilon(1e-12));
  CHECK(profile.min_y == doctest::Approx(0.2581).epsilon(2e-3 / 0.2581));
  CHECK(profile.max_y == doctest::Approx(1.3905).epsilon(2e-3 / 1.3905));
  CHECK(profile.period_residual <= 1e-8);
  CHECK(profile.first_integral_residual <= 1e-6);
  CHECK(virial_residual(profile) <= 1e-5);
  CHECK(rayleigh_quotient(profile) < std::pow(2.0 * pi, 0.25));

  // samples: positive, min/max attained at the stated values
  double lo = 1e9, hi = -1e9;
  for (double v : profile.y) {
    CHECK(v > 0.0);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(lo == doctest::Approx(profile.min_y).epsilon(1e-6));
  CHECK(hi == doctest::Approx(profile.max_y).epsilon(1e-6));
  // anchored with the minimum at x = -T
  CHECK(profile.y.front() == doctest::Approx(profile.min_y).epsilon(1e-12));
}

TEST_CASE("profile symmetry about extrema") {
  const auto alpha = solve_alpha_for_period(4.0, pi, 1, 1e-11);
  const auto profile = reconstruct_profile(4.0, *alpha, 1, pi, 2048);
  // single oscillation: maximum at the middle sample; even about both ends
  const size_t n = profile.y.size() - 1;
  for (size_t s = 1; s < n / 2; ++s) {
    CHECK(std::abs(profile.y[n / 2 + s] - profile.y[n / 2 - s]) <= 1e-8);
    CHECK(std::abs(profile.y[s] - profile.y[n - s]) <= 1e-8);
  }
}

TEST_CASE("multi-oscillation profile has period 2T/n") {
  const double T = 2.0 * pi;
  const auto alpha = solve_alpha_for_period(4.0, T, 2, 1e-11);
  REQUIRE(alpha.has_value());
  const auto profile = reconstruct_profile(4.0, *alpha, 2, T, 4096);
  CHECK(profile.period_residual <= 1e-8);
  CHECK(profile.first_integral_residual <= 1e-6);
  const size_t n = profile.y.size() - 1;
  // shifting by one oscillation reproduces the samples
  for (size_t j = 0; j + n / 2 < n; j += 7) {
    CHECK(profile.y[j] == doctest::Approx(profile.y[j + n / 2]).epsilon(1e-9));
  }
}

TEST_CASE("Rayleigh quotient of the constant solution") {
  // y = 1 gives ||y||_{H^1} / ||y||_{L_q} = (2T)^{1/2 - 1/q}
  for (double T : {1.0, pi, 2.5}) {
    for (double q : {3.0, 4.0, 6.0}) {
      PeriodicProfile constant;
      constant.q = q;
      constant.T = T;
      constant.n = 1;
      const int N = 256;
      for (int j = 0; j <= N; ++j) {
        constant.x.push_back(-T + 2.0 * T * j / N);
        constant.y.push_back(1.0);
      }
      CHECK(rayleigh_quotient(constant) ==
            doctest::Approx(std::pow(2.0 * T, 0.5 - 1.0 / q)).epsilon(1e-12));
    }
  }
}

TEST_CASE("virial identity equals the Rayleigh shortcut") {
  const auto alpha = solve_alpha_for_period(4.0, pi, 1, 1e-11);
  const auto profile = reconstruct_profile(4.0, *alpha, 1, pi);
  // For exact solutions, R = ||y||_{L_q}^{(q-2)/2}.
  const size_t n = profile.y.size() - 1;
  const double h = 2.0 * pi / static_cast<double>(n);
  double lq_pow = 0.0;
  for (size_t j = 0; j < n; ++j) lq_pow += std::pow(profile.y[j], 4.0);
  lq_pow *= h;
  const double lq = std::pow(lq_pow, 0.25);
  CHECK(rayleigh_quotient(profile) == doctest::Approx(std::pow(lq, 1.0)).epsilon(1e-5));
}

TEST_CASE("degenerate limit recovers the constant solution") {
  const double q = 4.0;
  const double alpha = 0.25 * (1.0 - 1e-8);
  // pick T consistent with this alpha so the period residual passes
  const double half = quadrature::period_integral(q, alpha).value;
  const auto profile = reconstruct_profile(q, alpha, 1, half, 512);
  CHECK(profile.max_y - profile.min_y < 2e-4);
  CHECK(profile.min_y == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(profile.max_y == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("profile consistency guard") {
  // alpha that does not solve the period equation must be rejected
  CHECK_THROWS_AS(reconstruct_profile(4.0, 0.1, 1, pi), ConsistencyError);
  CHECK_THROWS_AS(reconstruct_profile(4.0, 0.0322, 1, pi, 8), DomainError);
}
