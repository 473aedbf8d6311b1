#include "sobemb.h"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "sobemb/certify.hpp"
#include "sobemb/embedding.hpp"
#include "sobemb/errors.hpp"
#include "sobemb/phase_plane.hpp"
#include "sobemb/quadrature.hpp"
#include "sobemb/solutions.hpp"

struct sobemb_profile {
  sobemb::solutions::PeriodicProfile profile;
  double virial;
  double rayleigh;
};

struct sobemb_report {
  sobemb::certify::CertificateReport report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

template <class Fn>
sobemb_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SOBEMB_OK;
  } catch (const sobemb::DegenerateOvalError& e) {
    set_error(e.what());
    return SOBEMB_ERROR_DEGENERATE;
  } catch (const sobemb::ConvergenceError& e) {
    set_error(e.what());
    return SOBEMB_ERROR_NO_CONVERGENCE;
  } catch (const sobemb::InconclusiveError& e) {
    set_error(e.what());
    return SOBEMB_ERROR_INCONCLUSIVE;
  } catch (const sobemb::ConsistencyError& e) {
    set_error(e.what());
    return SOBEMB_ERROR_CONSISTENCY;
  } catch (const sobemb::DomainError& e) {
    set_error(e.what());
    return SOBEMB_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SOBEMB_ERROR_INVALID_ARGUMENT;
  }
}

sobemb_status require(bool ok, const char* message) {
  if (ok) return SOBEMB_OK;
  set_error(message);
  return SOBEMB_ERROR_INVALID_ARGUMENT;
}

sobemb_quad_result to_c(const sobemb::quadrature::QuadResult& r) {
  return {r.value, r.abs_error_estimate, r.evaluations};
}

sobemb_status finish_report(sobemb::certify::CertificateReport&& report,
                            sobemb_report** out) {
  *out = new sobemb_report{std::move(report)};
  return SOBEMB_OK;
}

}  // namespace

extern "C" {

const char* sobemb_version(void) { return "1.0.0"; }

const char* sobemb_status_name(sobemb_status status) {
  switch (status) {
    case SOBEMB_OK: return "ok";
    case SOBEMB_ERROR_DOMAIN: return "domain_error";
    case SOBEMB_ERROR_DEGENERATE: return "degenerate_oval";
    case SOBEMB_ERROR_NO_CONVERGENCE: return "no_convergence";
    case SOBEMB_ERROR_INCONCLUSIVE: return "inconclusive";
    case SOBEMB_ERROR_CONSISTENCY: return "consistency_error";
    case SOBEMB_ERROR_INVALID_ARGUMENT: return "invalid_argument";
  }
  return "unknown";
}

const char* sobemb_last_error_message(void) { return g_last_error.c_str(); }

sobemb_status sobemb_alpha_star(double q, double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::phase_plane::alpha_star(q); });
}

sobemb_status sobemb_f_eval(double q, double alpha, double t, int order,
                            double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::phase_plane::f_eval(q, alpha, t, order); });
}

sobemb_status sobemb_oval_roots(double q, double alpha, sobemb_oval* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    const auto oval = sobemb::phase_plane::oval_roots(q, alpha);
    *out = {oval.q, oval.alpha, oval.x0, oval.xhat, oval.x1};
  });
}

sobemb_status sobemb_psi_eval(const sobemb_oval* oval, double t, double* out) {
  if (auto bad = require(oval && out, "null pointer")) return bad;
  return guarded([&] {
    const sobemb::phase_plane::Oval cpp{oval->q, oval->alpha, oval->x0,
                                        oval->xhat, oval->x1};
    *out = sobemb::phase_plane::psi_eval(cpp, t);
  });
}

sobemb_status sobemb_g_family_eval(const sobemb_oval* oval, double t,
                                   sobemb_g_kind which, double* out) {
  if (auto bad = require(oval && out, "null pointer")) return bad;
  if (auto bad = require(which >= SOBEMB_G && which <= SOBEMB_G2, "bad g kind")) {
    return bad;
  }
  return guarded([&] {
    const sobemb::phase_plane::Oval cpp{oval->q, oval->alpha, oval->x0,
                                        oval->xhat, oval->x1};
    *out = sobemb::phase_plane::g_family_eval(
        cpp, t, static_cast<sobemb::phase_plane::GKind>(which));
  });
}

sobemb_status sobemb_beta_gamma_eval(double q, double t,
                                     sobemb_bg_family family, int order,
                                     double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  if (auto bad = require(family == SOBEMB_BETA || family == SOBEMB_GAMMA,
                         "bad family")) {
    return bad;
  }
  return guarded([&] {
    *out = sobemb::phase_plane::beta_gamma_eval(
        q, t, static_cast<sobemb::phase_plane::BGFamily>(family), order);
  });
}

sobemb_status sobemb_tau(double z, double q, double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::phase_plane::tau_eval(z, q); });
}

sobemb_status sobemb_poly_p(double z, double q, double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::phase_plane::poly_p(z, q); });
}

sobemb_status sobemb_poly_q(double z, double q, double tau, double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::phase_plane::poly_q(z, q, tau); });
}

sobemb_status sobemb_period_integral(double q, double alpha, double tol,
                                     sobemb_quad_result* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    *out = to_c(sobemb::quadrature::period_integral(q, alpha, tol));
  });
}

sobemb_status sobemb_period_integral_deriv(double q, double alpha, double tol,
                                           sobemb_quad_result* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    *out = to_c(sobemb::quadrature::period_integral_deriv(q, alpha, tol));
  });
}

sobemb_status sobemb_elliptic_oracle_q4(double alpha, double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::quadrature::elliptic_oracle_q4(alpha); });
}

sobemb_status sobemb_period_limit(double q, double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::quadrature::period_limit(q); });
}

sobemb_status sobemb_duality_residual(double q, double alpha, double tol,
                                      double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::quadrature::duality_residual(q, alpha, tol); });
}

sobemb_status sobemb_sharp_constant_eval(double q, double r, double half_period,
                                         sobemb_sharp_constant* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    const auto result =
        sobemb::embedding::sharp_constant({q, r, half_period});
    out->value = result.value;
    switch (result.status) {
      case sobemb::embedding::ConstantStatus::exact_constant_minimizer:
        out->status = SOBEMB_CONSTANT_EXACT;
        break;
      case sobemb::embedding::ConstantStatus::constant_not_minimizer_upper_bound:
        out->status = SOBEMB_CONSTANT_UPPER_BOUND;
        break;
      case sobemb::embedding::ConstantStatus::below_threshold_q_le_2:
        out->status = SOBEMB_CONSTANT_Q_LE_2;
        break;
    }
  });
}

sobemb_status sobemb_smallest_eigenvalue(double q, double r, double half_period,
                                         double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    *out = sobemb::embedding::smallest_eigenvalue(q, r, half_period);
  });
}

sobemb_status sobemb_steklov_reduce(double r, double half_period, double* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::embedding::steklov_reduce(r, half_period); });
}

sobemb_status sobemb_band_index(double q, double half_period, int* out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] { *out = sobemb::solutions::band_index(q, half_period); });
}

sobemb_status sobemb_count_periodic_solutions(double q, double half_period,
                                              int* k_out, int* solvable_n,
                                              size_t cap, size_t* n_count) {
  if (auto bad = require(k_out && n_count, "null pointer")) return bad;
  if (auto bad = require(cap == 0 || solvable_n != nullptr,
                         "null solvable_n with nonzero cap")) {
    return bad;
  }
  return guarded([&] {
    const auto count = sobemb::solutions::count_periodic_solutions(q, half_period);
    *k_out = count.k;
    *n_count = count.solvable_n.size();
    const size_t take = std::min(cap, count.solvable_n.size());
    for (size_t i = 0; i < take; ++i) solvable_n[i] = count.solvable_n[i];
  });
}

sobemb_status sobemb_solve_alpha_for_period(double q, double half_period, int n,
                                            double tol, int* found,
                                            double* alpha_out) {
  if (auto bad = require(found && alpha_out, "null pointer")) return bad;
  return guarded([&] {
    const auto alpha =
        sobemb::solutions::solve_alpha_for_period(q, half_period, n, tol);
    *found = alpha.has_value() ? 1 : 0;
    *alpha_out = alpha.value_or(0.0);
  });
}

sobemb_status sobemb_profile_reconstruct(double q, double alpha, int n,
                                         double half_period, int grid_size,
                                         sobemb_profile** out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    auto profile =
        sobemb::solutions::reconstruct_profile(q, alpha, n, half_period, grid_size);
    const double virial = sobemb::solutions::virial_residual(profile);
    const double rayleigh = sobemb::solutions::rayleigh_quotient(profile);
    *out = new sobemb_profile{std::move(profile), virial, rayleigh};
  });
}

void sobemb_profile_free(sobemb_profile* profile) { delete profile; }

size_t sobemb_profile_sample_count(const sobemb_profile* profile) {
  return profile ? profile->profile.x.size() : 0;
}

sobemb_status sobemb_profile_samples(const sobemb_profile* profile, double* x,
                                     double* y, size_t cap) {
  if (auto bad = require(profile && x && y, "null pointer")) return bad;
  if (auto bad = require(cap >= profile->profile.x.size(),
                         "sample buffer too small")) {
    return bad;
  }
  std::memcpy(x, profile->profile.x.data(),
              profile->profile.x.size() * sizeof(double));
  std::memcpy(y, profile->profile.y.data(),
              profile->profile.y.size() * sizeof(double));
  return SOBEMB_OK;
}

sobemb_status sobemb_profile_info_get(const sobemb_profile* profile,
                                      sobemb_profile_info* out) {
  if (auto bad = require(profile && out, "null pointer")) return bad;
  const auto& p = profile->profile;
  *out = {p.q,     p.alpha, p.mu,
          p.c1,    p.T,     p.n,
          p.min_y, p.max_y, p.period_residual,
          p.first_integral_residual, profile->virial, profile->rayleigh};
  return SOBEMB_OK;
}

sobemb_status sobemb_certify_main_lemma(const double* q_grid, size_t q_count,
                                        int alpha_density, sobemb_report** out) {
  if (auto bad = require(out && (q_count == 0 || q_grid), "null pointer")) return bad;
  return guarded([&] {
    finish_report(sobemb::certify::certify_main_lemma({q_grid, q_count},
                                                      alpha_density),
                  out);
  });
}

sobemb_status sobemb_certify_main_lemma_default(int density, sobemb_report** out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    finish_report(sobemb::certify::certify_main_lemma_default(density), out);
  });
}

sobemb_status sobemb_certify_lemma22(double q, double alpha, sobemb_report** out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    finish_report(sobemb::certify::certify_lemma22(q, alpha), out);
  });
}

sobemb_status sobemb_certify_lemma22_default(int density, sobemb_report** out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    finish_report(sobemb::certify::certify_lemma22_default(density), out);
  });
}

sobemb_status sobemb_certify_lemma23(double q, double alpha, sobemb_report** out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    finish_report(sobemb::certify::certify_lemma23(q, alpha), out);
  });
}

sobemb_status sobemb_certify_lemma23_default(int density, sobemb_report** out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    finish_report(sobemb::certify::certify_lemma23_default(density), out);
  });
}

sobemb_status sobemb_certify_polynomials(int density, sobemb_report** out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    finish_report(sobemb::certify::certify_polynomials(density), out);
  });
}

sobemb_status sobemb_certify_chain(int density, sobemb_report** out) {
  if (auto bad = require(out != nullptr, "null out pointer")) return bad;
  return guarded([&] {
    finish_report(sobemb::certify::certify_chain(density), out);
  });
}

void sobemb_report_free(sobemb_report* report) { delete report; }

const char* sobemb_report_name(const sobemb_report* report) {
  return report ? report->report.name.c_str() : "";
}

const char* sobemb_report_grid_spec(const sobemb_report* report) {
  return report ? report->report.grid_spec.c_str() : "";
}

int sobemb_report_passed(const sobemb_report* report) {
  return report && report->report.passed ? 1 : 0;
}

double sobemb_report_margin(const sobemb_report* report) {
  return report ? report->report.margin : 0.0;
}

size_t sobemb_report_witness_count(const sobemb_report* report) {
  return report ? report->report.witnesses.size() : 0;
}

sobemb_status sobemb_report_witness_get(const sobemb_report* report,
                                        size_t index, sobemb_witness* out) {
  if (auto bad = require(report && out, "null pointer")) return bad;
  if (auto bad = require(index < report->report.witnesses.size(),
                         "witness index out of range")) {
    return bad;
  }
  const auto& w = report->report.witnesses[index];
  std::snprintf(out->label, sizeof(out->label), "%s", w.label.c_str());
  out->dim = static_cast<int>(std::min<size_t>(w.point.size(), 4));
  for (int i = 0; i < 4; ++i) {
    out->point[i] = i < out->dim ? w.point[static_cast<size_t>(i)] : 0.0;
  }
  out->value = w.value;
  return SOBEMB_OK;
}

}  // extern "C"
