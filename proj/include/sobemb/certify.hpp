#pragma once

// Grid-based numerical certificates for the inequalities behind the period
// monotonicity result: dI/dalpha < 0, the sign pattern of g', the ordering
// g(x0) < g(xhat) < g(x1), the P/Q polynomial claims, and the (z_k, tau_k)
// continuation chain. Certificates report signed margins and witnesses, not
// proofs; refinement stability (passing again on a finer grid) is the guard.

#include <span>
#include <string>
#include <vector>

#include "sobemb/errors.hpp"

namespace sobemb::certify {

struct Witness {
  std::string label;
  std::vector<double> point;
  double value;
};

struct CertificateReport {
  std::string name;
  bool passed;
  double margin;  ///< smallest slack encountered, signed; passed == (margin > 0)
  std::vector<Witness> witnesses;  ///< extremal-slack points; failures when !passed
  std::string grid_spec;
};

/// dI/dalpha < 0 and I > pi/sqrt(q-2) over q_grid x alpha_density points of
/// (0.01 alpha*, 0.999 alpha*). Entries with q > 4 are additionally checked
/// against the duality identity (which maps them into (2, 4]).
CertificateReport certify_main_lemma(std::span<const double> q_grid,
                                     int alpha_density = 50);
CertificateReport certify_main_lemma_default(int density = 1);

/// Sign pattern of g' at a single (q, alpha): for q > 3, g'(x0) < 0,
/// g'(xhat) > 0, g'(x1) < 0 and exactly two sign changes of g1 on [x0, x1];
/// for q <= 3 the monotone variant (g increasing). Crossing isolation refines
/// locally down to 1e-6 (x1 - x0) and throws InconclusiveError below that.
CertificateReport certify_lemma22(double q, double alpha, int scan_density = 1);
CertificateReport certify_lemma22_default(int density = 1);

/// Strict ordering g(x0) < g(xhat) < g(x1) at a single (q, alpha), 3 <= q <= 4.
CertificateReport certify_lemma23(double q, double alpha);
CertificateReport certify_lemma23_default(int density = 1);

/// The polynomial claims: (a) the beta3/gamma3 quotient denominator is
/// negative for z >= 1, 3 <= q <= 4; (b) P(1, q) > 0 and P strictly decreasing
/// along increasing z grids; (c) the three consistent printed factorizations
/// match the expanded P/Q forms at rel. 1e-5; (d) dQ/dq at q = 4 matches its
/// closed form and is <= 0 for z <= 3, with Q convex in q; (e) Q(z, 3, tau7) < 0
/// on [1, 20] plus a negative leading coefficient.
CertificateReport certify_polynomials(int density = 1);

/// The continuation chain (z_k, tau_k), k = 0..7: per step, tau(z_k, 4) < tau_k,
/// Q(z, 3, tau_k) < 0 on [z_k, z_{k+1}], and the q-monotonicity guard; then the
/// tail Q(z, 3, tau_7) < 0 for z >= z_7.
CertificateReport certify_chain(int density = 1);

/// The hard-coded checkpoints (z_k, tau_k) of the continuation chain.
std::span<const std::pair<double, double>> chain_checkpoints();

}  // namespace sobemb::certify
