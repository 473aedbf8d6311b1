// sobemb command-line front end. Talks to the shared library exclusively
// through the C interface in sobemb.h; reports are JSON (one document per
// run) or CSV with deterministic field order and shortest round-trip
// number formatting.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sobemb.h"

namespace {

using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 success, 1 invalid input, 2 failed certification,
// 3 numerical non-convergence.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCertification = 2;
constexpr int kExitNumerical = 3;

struct CliError {
  int code;
  std::string message;
};

void raise(sobemb_status status) {
  const std::string message = std::string(sobemb_status_name(status)) + ": " +
                              sobemb_last_error_message();
  switch (status) {
    case SOBEMB_ERROR_NO_CONVERGENCE:
      throw CliError{kExitNumerical, message};
    case SOBEMB_ERROR_INCONCLUSIVE:
      throw CliError{kExitCertification, message};
    default:
      throw CliError{kExitInvalid, message};
  }
}

void check(sobemb_status status) {
  if (status != SOBEMB_OK) raise(status);
}

double finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw CliError{kExitNumerical,
                   std::string("non-finite value in output field '") + what + "'"};
  }
  return value;
}

std::string format_double(double value) {
  char buffer[40];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw CliError{kExitInvalid, "cannot open output file " + out_path};
  file << text;
  if (text.empty() || text.back() != '\n') file << '\n';
}

std::vector<double> range_points(double lo, double hi, int steps) {
  std::vector<double> points(static_cast<size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    points[static_cast<size_t>(i)] =
        (steps == 1) ? lo : lo + (hi - lo) * i / (steps - 1);
  }
  return points;
}

ordered_json report_to_json(const sobemb_report* report) {
  ordered_json doc;
  doc["name"] = sobemb_report_name(report);
  doc["passed"] = sobemb_report_passed(report) != 0;
  doc["margin"] = finite(sobemb_report_margin(report), "margin");
  doc["grid"] = sobemb_report_grid_spec(report);
  ordered_json witnesses = ordered_json::array();
  for (size_t i = 0; i < sobemb_report_witness_count(report); ++i) {
    sobemb_witness w;
    check(sobemb_report_witness_get(report, i, &w));
    ordered_json entry;
    entry["label"] = w.label;
    ordered_json point = ordered_json::array();
    for (int d = 0; d < w.dim; ++d) point.push_back(finite(w.point[d], "witness"));
    entry["point"] = point;
    entry["value"] = finite(w.value, "witness value");
    witnesses.push_back(entry);
  }
  doc["witnesses"] = witnesses;
  return doc;
}

// ---- constant ------------------------------------------------------------

int run_constant(double q, double r, double T, bool csv, const std::string& out) {
  sobemb_sharp_constant result;
  check(sobemb_sharp_constant_eval(q, r, T, &result));
  const char* status = result.status == SOBEMB_CONSTANT_EXACT
                           ? "exact_constant_minimizer"
                       : result.status == SOBEMB_CONSTANT_UPPER_BOUND
                           ? "constant_not_minimizer_upper_bound"
                           : "below_threshold_q_le_2";
  if (csv) {
    std::string text = "q,r,T,value,status\n";
    text += format_double(q) + "," + format_double(r) + "," + format_double(T) +
            "," + format_double(finite(result.value, "value")) + "," + status;
    emit(text, out);
  } else {
    ordered_json doc;
    doc["value"] = finite(result.value, "value");
    doc["status"] = status;
    emit(doc.dump(2), out);
  }
  return kExitOk;
}

// ---- integral ------------------------------------------------------------

int run_integral(double q, double alpha, double tol, bool with_deriv, bool csv,
                 const std::string& out) {
  sobemb_quad_result integral;
  check(sobemb_period_integral(q, alpha, tol, &integral));
  sobemb_quad_result deriv{};
  if (with_deriv) check(sobemb_period_integral_deriv(q, alpha, tol, &deriv));
  if (csv) {
    std::string text = "q,alpha,value,abs_error_estimate,evaluations";
    if (with_deriv) text += ",derivative,derivative_error";
    text += "\n" + format_double(q) + "," + format_double(alpha) + "," +
            format_double(finite(integral.value, "value")) + "," +
            format_double(integral.abs_error_estimate) + "," +
            std::to_string(integral.evaluations);
    if (with_deriv) {
      text += "," + format_double(finite(deriv.value, "derivative")) + "," +
              format_double(deriv.abs_error_estimate);
    }
    emit(text, out);
  } else {
    ordered_json doc;
    doc["q"] = q;
    doc["alpha"] = alpha;
    doc["value"] = finite(integral.value, "value");
    doc["abs_error_estimate"] = integral.abs_error_estimate;
    doc["evaluations"] = integral.evaluations;
    if (with_deriv) {
      doc["derivative"] = {{"value", finite(deriv.value, "derivative")},
                           {"abs_error_estimate", deriv.abs_error_estimate},
                           {"evaluations", deriv.evaluations}};
    }
    emit(doc.dump(2), out);
  }
  return kExitOk;
}

// ---- count ---------------------------------------------------------------

int run_count(double q, double T, bool csv, const std::string& out) {
  int k = 0;
  size_t n_count = 0;
  std::vector<int> solvable(64);
  check(sobemb_count_periodic_solutions(q, T, &k, solvable.data(),
                                        solvable.size(), &n_count));
  solvable.resize(n_count);
  if (csv) {
    std::string text = "q,T,k,solvable_n\n";
    text += format_double(q) + "," + format_double(T) + "," + std::to_string(k) + ",";
    for (size_t i = 0; i < solvable.size(); ++i) {
      text += (i ? ";" : "") + std::to_string(solvable[i]);
    }
    emit(text, out);
  } else {
    ordered_json doc;
    doc["k"] = k;
    doc["solvable_n"] = solvable;
    emit(doc.dump(2), out);
  }
  return kExitOk;
}

// ---- profile -------------------------------------------------------------

int run_profile(double q, double T, int n, std::optional<double> alpha_opt,
                double tol, int grid, const std::string& prefix) {
  double alpha = 0.0;
  if (alpha_opt) {
    alpha = *alpha_opt;
  } else {
    int found = 0;
    check(sobemb_solve_alpha_for_period(q, T, n, tol, &found, &alpha));
    if (!found) {
      throw CliError{kExitInvalid,
                     "period equation unsolvable: T/n does not exceed the "
                     "limiting period pi/sqrt(q-2)"};
    }
  }
  sobemb_profile* profile = nullptr;
  check(sobemb_profile_reconstruct(q, alpha, n, T, grid, &profile));
  const size_t count = sobemb_profile_sample_count(profile);
  std::vector<double> xs(count), ys(count);
  check(sobemb_profile_samples(profile, xs.data(), ys.data(), count));
  sobemb_profile_info info;
  check(sobemb_profile_info_get(profile, &info));
  sobemb_profile_free(profile);

  std::string samples = "x,y\n";
  for (size_t i = 0; i < count; ++i) {
    samples += format_double(finite(xs[i], "x")) + "," +
               format_double(finite(ys[i], "y")) + "\n";
  }
  emit(samples, prefix + "_samples.csv");

  ordered_json doc;
  doc["q"] = info.q;
  doc["alpha"] = finite(info.alpha, "alpha");
  doc["mu"] = info.mu;
  doc["c1"] = finite(info.c1, "c1");
  doc["T"] = info.half_period;
  doc["n"] = info.n;
  doc["min_y"] = finite(info.min_y, "min_y");
  doc["max_y"] = finite(info.max_y, "max_y");
  doc["period_residual"] = finite(info.period_residual, "period_residual");
  doc["first_integral_residual"] =
      finite(info.first_integral_residual, "first_integral_residual");
  doc["virial_residual"] = finite(info.virial_residual, "virial_residual");
  doc["rayleigh_quotient"] = finite(info.rayleigh_quotient, "rayleigh_quotient");
  emit(doc.dump(2), prefix + "_invariants.json");
  emit(doc.dump(2), "");
  return kExitOk;
}

// ---- certify ---------------------------------------------------------------

int run_certify(const std::string& suite, int density, std::optional<double> q,
                std::optional<double> alpha, const std::string& out) {
  struct Entry {
    std::string name;
    sobemb_report* report = nullptr;
  };
  std::vector<Entry> entries;
  const auto add = [&](const char* name, auto make) {
    sobemb_report* report = nullptr;
    check(make(&report));
    entries.push_back({name, report});
  };

  const bool pointwise = q.has_value() && alpha.has_value();
  if (suite == "all" || suite == "main-lemma") {
    add("main-lemma", [&](sobemb_report** r) {
      return sobemb_certify_main_lemma_default(density, r);
    });
  }
  if (suite == "all" || suite == "lemma22") {
    add("lemma22", [&](sobemb_report** r) {
      return pointwise && suite == "lemma22"
                 ? sobemb_certify_lemma22(*q, *alpha, r)
                 : sobemb_certify_lemma22_default(density, r);
    });
  }
  if (suite == "all" || suite == "lemma23") {
    add("lemma23", [&](sobemb_report** r) {
      return pointwise && suite == "lemma23"
                 ? sobemb_certify_lemma23(*q, *alpha, r)
                 : sobemb_certify_lemma23_default(density, r);
    });
  }
  if (suite == "all" || suite == "polynomials") {
    add("polynomials", [&](sobemb_report** r) {
      return sobemb_certify_polynomials(density, r);
    });
  }
  if (suite == "all" || suite == "chain") {
    add("chain", [&](sobemb_report** r) { return sobemb_certify_chain(density, r); });
  }
  if (entries.empty()) {
    throw CliError{kExitInvalid, "unknown certify suite: " + suite};
  }

  bool all_passed = true;
  ordered_json reports = ordered_json::array();
  for (const auto& entry : entries) {
    all_passed = all_passed && sobemb_report_passed(entry.report) != 0;
    reports.push_back(report_to_json(entry.report));
    sobemb_report_free(entry.report);
  }
  ordered_json doc;
  doc["suite"] = suite;
  doc["density"] = density;
  doc["passed"] = all_passed;
  doc["reports"] = reports;
  emit(doc.dump(2), out);
  return all_passed ? kExitOk : kExitCertification;
}

// ---- sweep -----------------------------------------------------------------

int run_sweep(const std::string& quantity, double q_min, double q_max,
              int q_steps, double x_min, double x_max, int x_steps, double r,
              double tol, const std::string& out) {
  const bool over_alpha = quantity == "integral" || quantity == "deriv";
  std::string text = std::string("q,") + (over_alpha ? "alpha" : "T") +
                     ",value,error_estimate,diagnostic\n";
  for (double q : range_points(q_min, q_max, q_steps)) {
    for (double x : range_points(x_min, x_max, x_steps)) {
      text += format_double(q) + "," + format_double(x) + ",";
      std::string value, error, diagnostic;
      sobemb_status status = SOBEMB_OK;
      if (quantity == "integral" || quantity == "deriv") {
        sobemb_quad_result result;
        status = quantity == "integral"
                     ? sobemb_period_integral(q, x, tol, &result)
                     : sobemb_period_integral_deriv(q, x, tol, &result);
        if (status == SOBEMB_OK) {
          value = format_double(result.value);
          error = format_double(result.abs_error_estimate);
        }
      } else if (quantity == "count") {
        int k = 0;
        size_t n_count = 0;
        status = sobemb_count_periodic_solutions(q, x, &k, nullptr, 0, &n_count);
        if (status == SOBEMB_OK) value = std::to_string(k);
      } else if (quantity == "constant") {
        sobemb_sharp_constant result;
        status = sobemb_sharp_constant_eval(q, r, x, &result);
        if (status == SOBEMB_OK) value = format_double(result.value);
      } else {
        throw CliError{kExitInvalid, "unknown sweep quantity: " + quantity};
      }
      if (status != SOBEMB_OK) {
        diagnostic = std::string(sobemb_status_name(status)) + ": " +
                     sobemb_last_error_message();
        for (char& c : diagnostic) {
          if (c == ',' || c == '\n') c = ';';
        }
      }
      text += value + "," + error + "," + diagnostic + "\n";
    }
  }
  emit(text, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp constants of the periodic embedding H^r(-T,T) -> L_q(-T,T): "
               "period integrals, extremal profiles, solution counts, and "
               "numerical certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(sobemb_version()); });

  // constant
  double q = 4.0, r = 1.0, T = 1.0, alpha = 0.1, tol = 1e-10;
  bool csv = false, json_flag = false, with_deriv = false;
  std::string out, suite = "all", quantity = "integral", prefix = "profile";
  int n = 1, grid = 4096, density = 1;

  auto* constant = app.add_subcommand("constant", "sharp embedding constant");
  constant->add_option("--q", q, "integrability exponent q")->required();
  constant->add_option("--r", r, "smoothness order r")->required();
  constant->add_option("--T", T, "half-period T")->required();
  constant->add_flag("--csv", csv, "emit CSV instead of JSON");
  constant->add_flag("--json", json_flag, "emit JSON (default)");
  constant->add_option("--out", out, "write the report to a file");

  auto* integral = app.add_subcommand("integral", "period integral I_q(alpha)");
  integral->add_option("--q", q)->required();
  integral->add_option("--alpha", alpha)->required();
  integral->add_option("--tol", tol, "absolute tolerance (default 1e-10)");
  integral->add_flag("--deriv", with_deriv, "also compute dI/dalpha");
  integral->add_flag("--csv", csv);
  integral->add_flag("--json", json_flag);
  integral->add_option("--out", out);

  auto* count = app.add_subcommand("count", "periodic solution count");
  count->add_option("--q", q)->required();
  count->add_option("--T", T)->required();
  count->add_flag("--csv", csv);
  count->add_flag("--json", json_flag);
  count->add_option("--out", out);

  auto* profile = app.add_subcommand("profile", "reconstruct an extremal profile");
  profile->add_option("--q", q)->required();
  profile->add_option("--T", T)->required();
  profile->add_option("--n", n, "oscillations per period (default 1)");
  std::optional<double> alpha_opt;
  profile->add_option("--alpha", alpha_opt,
                      "phase parameter (default: solve I_q(alpha) = T/n)");
  profile->add_option("--tol", tol);
  profile->add_option("--grid", grid, "samples per period (default 4096)");
  profile->add_option("--out", prefix,
                      "output prefix for _samples.csv and _invariants.json");

  auto* certify = app.add_subcommand("certify", "run numerical certificates");
  certify->add_option("--suite", suite,
                      "all | main-lemma | lemma22 | lemma23 | polynomials | chain");
  certify->add_option("--density", density, "grid density multiplier (default 1)");
  std::optional<double> q_opt, alpha_pt;
  certify->add_option("--q", q_opt, "pointwise q (lemma22/lemma23 only)");
  certify->add_option("--alpha", alpha_pt, "pointwise alpha (lemma22/lemma23 only)");
  certify->add_option("--out", out);

  auto* sweep = app.add_subcommand("sweep", "tabulate a quantity over a grid");
  sweep->add_option("--quantity", quantity, "integral | deriv | count | constant");
  double q_min = 4.0, q_max = 4.0, x_min = 0.0, x_max = 0.0;
  int q_steps = 1, steps = 50;
  sweep->add_option("--q", q_min, "single q (shorthand for a one-point q range)");
  sweep->add_option("--q-min", q_min);
  sweep->add_option("--q-max", q_max);
  sweep->add_option("--q-steps", q_steps);
  sweep->add_option("--alpha-min", x_min);
  sweep->add_option("--alpha-max", x_max);
  sweep->add_option("--T-min", x_min);
  sweep->add_option("--T-max", x_max);
  sweep->add_option("--steps", steps, "points along the alpha/T axis");
  sweep->add_option("--r", r, "smoothness order for the constant sweep");
  sweep->add_option("--tol", tol);
  sweep->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (constant->parsed()) return run_constant(q, r, T, csv, out);
    if (integral->parsed()) return run_integral(q, alpha, tol, with_deriv, csv, out);
    if (count->parsed()) return run_count(q, T, csv, out);
    if (profile->parsed()) return run_profile(q, T, n, alpha_opt, tol, grid, prefix);
    if (certify->parsed()) return run_certify(suite, density, q_opt, alpha_pt, out);
    if (sweep->parsed()) {
      if (!sweep->count("--q-max")) q_max = q_min;
      return run_sweep(quantity, q_min, q_max, q_steps, x_min, x_max, steps, r,
                       tol, out);
    }
  } catch (const CliError& error) {
    std::cerr << "error: " << error.message << "\n";
    return error.code;
  }
  return kExitInvalid;
}
