#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "sobemb/embedding.hpp"

using namespace sobemb;
using namespace sobemb::embedding;
using std::numbers::pi;

TEST_CASE("hr norm on constants and cosines") {
  for (double T : {0.5, 1.0, pi, 4.0}) {
    const auto one = FourierFunction::constant(1.0, T);
    for (double r : {0.5, 1.0, 2.0, 3.5}) {
      CHECK(hr_norm_sq(one, r) == doctest::Approx(2.0 * T).epsilon(1e-13));
    }
    for (int k : {1, 2, 5}) {
      const auto wave = FourierFunction::cosine(k, 1.0, T);
      for (double r : {0.5, 1.0, 2.0}) {
        const double expected = T * (std::pow(pi * k / T, 2.0 * r) + 1.0);
        CHECK(hr_norm_sq(wave, r) == doctest::Approx(expected).epsilon(1e-13));
      }
      // r = 0 weights every mode by 2: twice the squared L2 norm
      CHECK(hr_norm_sq(wave, 0.0) == doctest::Approx(2.0 * T).epsilon(1e-13));
    }
  }
}

TEST_CASE("sampling and evaluation") {
  FourierFunction y(2.0);
  y.add_cosine(0, 1.5);
  y.add_cosine(3, 0.25);
  y.add_sine(2, -0.75);
  CHECK(y.mean() == doctest::Approx(1.5).epsilon(1e-14));
  const auto samples = y.sample(64);
  for (int j = 0; j < 64; ++j) {
    const double x = -2.0 + 4.0 * j / 64.0;
    const double direct = 1.5 + 0.25 * std::cos(3.0 * pi * x / 2.0) -
                          0.75 * std::sin(2.0 * pi * x / 2.0);
    CHECK(samples[static_cast<size_t>(j)] == doctest::Approx(direct).epsilon(1e-12));
  }
  CHECK(y.mean_zero().mean() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(y.max_mode() == 3);
}

TEST_CASE("lq norm examples") {
  const double T = pi;
  const auto one = FourierFunction::constant(1.0, T);
  for (double q : {1.0, 2.0, 3.0, 4.0}) {
    CHECK(lq_norm(one, q) == doctest::Approx(std::pow(2.0 * T, 1.0 / q)).epsilon(1e-12));
  }
  // integral of cos^4 over a period is 3T/4
  const auto wave = FourierFunction::cosine(1, 1.0, T);
  CHECK(lq_norm(wave, 4.0) ==
        doctest::Approx(std::pow(3.0 * pi / 4.0, 0.25)).epsilon(1e-12));
  // q = 2 agrees with Parseval on the Fourier data
  FourierFunction mixed(1.5);
  mixed.add_cosine(0, 0.3);
  mixed.add_cosine(2, 1.1);
  mixed.add_sine(5, -0.4);
  double sum_sq = 0.0;
  for (const auto& [k, amp] : mixed.modes()) sum_sq += std::norm(amp);
  CHECK(lq_norm(mixed, 2.0) == doctest::Approx(std::sqrt(sum_sq)).epsilon(1e-10));
  CHECK_THROWS_AS(lq_norm(one, 0.5), DomainError);
  const std::vector<double> few(8, 1.0);
  CHECK_THROWS_AS(lq_norm(std::span<const double>(few), 2.0, 1.0), DomainError);
}

TEST_CASE("functional J vanishes on constants") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pick_q(1.0, 8.0), pick_r(0.25, 4.0),
      pick_T(0.2, 6.0), pick_c(0.1, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double q = pick_q(rng), r = pick_r(rng), T = pick_T(rng);
    const auto c = FourierFunction::constant(pick_c(rng), T);
    CHECK(std::abs(functional_j(c, q, r)) <= 1e-10 * hr_norm_sq(c, r));
  }
}

TEST_CASE("destabilization of the constant across the threshold") {
  // J(1 + 0.01 cos(pi x / T)) is negative above q = (pi/T)^{2r} + 2 and
  // positive below it.
  const auto perturbed = [](double T) {
    auto y = FourierFunction::constant(1.0, T);
    y.add_cosine(1, 0.01);
    return y;
  };
  for (auto [r, T, q] : {std::tuple{1.0, pi, 4.0}, {1.0, 2.0, 6.0}, {2.0, pi, 4.0}}) {
    CHECK(q > bifurcation_threshold(r, T));
    CHECK(functional_j(perturbed(T), q, r) < 0.0);
  }
  for (auto [r, T, q] : {std::tuple{1.0, pi, 2.5}, {1.0, 2.0, 4.0}}) {
    CHECK(q < bifurcation_threshold(r, T));
    CHECK(functional_j(perturbed(T), q, r) > 0.0);
  }
  // one threshold unit either side at r = 1, T = pi (threshold is 3)
  CHECK(functional_j(perturbed(pi), bifurcation_threshold(1.0, pi) + 1.0, 1.0) < 0.0);
  CHECK(functional_j(perturbed(pi), bifurcation_threshold(1.0, pi) - 1.0, 1.0) > 0.0);
}

TEST_CASE("second variation form") {
  const double T = pi;
  const auto constant = FourierFunction::constant(2.0, T);
  CHECK(second_variation_form(constant, 4.0, 1.0) == doctest::Approx(0.0));
  // cos(k pi x / T) gives T ((k pi / T)^{2r} + 2 - q)
  for (int k : {1, 2, 4}) {
    for (double r : {1.0, 2.0}) {
      for (double q : {2.5, 4.0, 9.0}) {
        const auto h = FourierFunction::cosine(k, 1.0, T);
        const double expected = T * (std::pow(pi * k / T, 2.0 * r) + 2.0 - q);
        CHECK(second_variation_form(h, q, r) ==
              doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
  // the threshold exactly annihilates the first mode
  for (double r : {1.0, 1.5, 3.0}) {
    for (double T2 : {0.7, 1.0, 2.0}) {
      const double q = bifurcation_threshold(r, T2);
      const auto h = FourierFunction::cosine(1, 1.0, T2);
      CHECK(std::abs(second_variation_form(h, q, r)) <= 1e-10 * T2);
    }
  }
}

TEST_CASE("second variation dominates the eigenvalue bound") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_int_distribution<int> mode(1, 8);
  for (int i = 0; i < 100; ++i) {
    const double T = 0.5 + 3.0 * (i % 7) / 6.0;
    const double q = 2.1 + 0.5 * (i % 11);
    const double r = 0.5 + 0.4 * (i % 5);
    FourierFunction h(T);
    for (int m = 0; m < 4; ++m) {
      h.add_cosine(mode(rng), amp(rng));
      h.add_sine(mode(rng), amp(rng));
    }
    const auto h1 = h.mean_zero();
    double l2_sq = 0.0;
    for (const auto& [k, a] : h1.modes()) l2_sq += std::norm(a);
    const double bound = smallest_eigenvalue(q, r, T) * l2_sq;
    CHECK(second_variation_form(h, q, r) >= bound - 1e-10 * std::max(1.0, std::abs(bound)));
  }
}

TEST_CASE("smallest eigenvalue examples") {
  CHECK(smallest_eigenvalue(4.0, 1.0, pi) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(smallest_eigenvalue(4.0, 1.0, 1.0) ==
        doctest::Approx(pi * pi - 2.0).epsilon(1e-12));
  CHECK(smallest_eigenvalue(4.0, 1.0, 1.0) == doctest::Approx(7.8696044).epsilon(1e-7));
  CHECK(smallest_eigenvalue(12.0, 2.0, 1.0) ==
        doctest::Approx(std::pow(pi, 4.0) - 10.0).epsilon(1e-13));
  CHECK(smallest_eigenvalue(12.0, 2.0, 1.0) == doctest::Approx(87.4091).epsilon(1e-6));
}

TEST_CASE("Steklov-Wirtinger reduction") {
  for (double T : {0.3, 1.0, pi, 5.0}) {
    CHECK(steklov_reduce(1.0, T) == doctest::Approx(T).epsilon(1e-14));
  }
  CHECK(steklov_reduce(2.0, pi) == doctest::Approx(pi).epsilon(1e-13));
  CHECK(steklov_reduce(2.0, 1.0) == doctest::Approx(1.0 / pi).epsilon(1e-12));
  CHECK_THROWS_AS(steklov_reduce(0.9, 1.0), DomainError);
  // (pi/T1)^2 = (pi/T)^{2r}
  for (double r = 1.0; r <= 4.0; r += 0.5) {
    for (double T : {0.1, 0.5, 1.0, 3.0, 10.0}) {
      const double T1 = steklov_reduce(r, T);
      const double lhs = std::pow(pi / T1, 2.0) + 2.0;
      const double rhs = std::pow(pi / T, 2.0 * r) + 2.0;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("sharp constant decisions") {
  // q <= 2: attained by the constant for any r
  const auto below = sharp_constant({1.5, 3.0, 2.0});
  CHECK(below.status == ConstantStatus::below_threshold_q_le_2);
  CHECK(below.value == doctest::Approx(std::pow(4.0, -1.0 / 6.0)).epsilon(1e-12));
  CHECK(below.value == doctest::Approx(0.7937005).epsilon(1e-7));

  // inside the threshold with r >= 1: exact
  const auto exact = sharp_constant({4.0, 1.0, 1.0});
  CHECK(exact.status == ConstantStatus::exact_constant_minimizer);
  CHECK(exact.value == std::pow(2.0, 0.25));

  // beyond the threshold at r = 1: strict upper bound below the constant's value
  const auto above = sharp_constant({4.0, 1.0, pi});
  CHECK(above.status == ConstantStatus::constant_not_minimizer_upper_bound);
  CHECK(above.value < std::pow(2.0 * pi, 0.25));
  CHECK(above.value == doctest::Approx(1.5107141825).epsilon(1e-8));

  // beyond the threshold at r > 1: the constant's value, flagged
  const auto above_r2 = sharp_constant({4.0, 2.0, pi});
  CHECK(above_r2.status == ConstantStatus::constant_not_minimizer_upper_bound);
  CHECK(above_r2.value == doctest::Approx(std::pow(2.0 * pi, 0.25)).epsilon(1e-13));

  CHECK_THROWS_AS(sharp_constant({4.0, 0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(sharp_constant({4.0, 1.0, -1.0}), DomainError);

  CHECK(std::string(to_string(exact.status)) == "exact_constant_minimizer");
  CHECK(std::string(to_string(above.status)) == "constant_not_minimizer_upper_bound");
  CHECK(std::string(to_string(below.status)) == "below_threshold_q_le_2");
}
