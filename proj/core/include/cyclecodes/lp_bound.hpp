#pragma once

// Delsarte-style linear programming bound over the Hamming scheme with a
// fractional alphabet q', and its certificates.
//
// A certificate is a coefficient vector Hhat_0..Hhat_n. It certifies the
// bound H(0)/Hhat_0 on codes with minimum distance >= d when
//   Hhat_l >= 0 for all l,  Hhat_0 > 0,  H(u) = sum_l Hhat_l K_l(u) <= 0 for
//   integer u in [d, n].

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclecodes/krawtchouk.hpp"

namespace cyclecodes::lpbound {

struct LPCertificate {
  kraw::SchemeParams scheme;
  std::vector<double> coeffs;  // Hhat_0..Hhat_n
  int d = 1;                   // target distance in [1, n+1]
};

struct LPBoundResult {
  double value = 1.0;      // H(0)/Hhat_0
  double log_bound = 0.0;  // n ln theta_L + ln value
  double rate = 0.0;       // log_bound / n
};

LPBoundResult make_bound(double value, int n, double theta_l);

struct CheckOptions {
  /// Absolute tolerance is rel_tol times the larger of max |Hhat_l| and
  /// max_u sum_l |Hhat_l K_l(u)|.
  double rel_tol = 1e-9;
};

struct CheckReport {
  bool feasible = false;
  double certified_value = 0.0;
  double raw_value = 0.0;       // H(0)/Hhat_0 as stated
  double max_violation = 0.0;   // worst of the sign violations
  double abs_tol = 0.0;
  std::string reason;           // empty when feasible
};

/// Re-evaluates every constraint. certified_value is the value of a repaired
/// certificate H + c sum_m K_m - eps, where c removes negative coefficients and
/// eps removes positive H(u) on [d, n]; it is a true bound whenever the
/// report is feasible.
CheckReport certificate_check(const LPCertificate& cert, const CheckOptions& opts = {});

/// H(0)/Hhat_0 without any repair.
double certificate_value(const LPCertificate& cert);

struct LPSolution {
  LPCertificate cert;
  double value = 1.0;
  int iterations = 0;
};

/// Minimizes H(0) subject to Hhat_0 = 1, Hhat >= 0, H(u) <= 0 on [d, n].
/// d = n+1 has no constraints and optimum exactly 1.
LPSolution lp_solve(const kraw::SchemeParams& scheme, int d);

/// Christoffel-Darboux certificate
///   H(u) = (K_t(a) K_{t+1}(u) - K_{t+1}(a) K_t(u))^2 / (a - u)
/// with t the least degree whose successor has its first root below d, and a
/// in (root(K_{t+1}), min(d, root(K_t))) tuned by golden-section search.
/// Coefficients are normalized to Hhat_0 = 1. Only certificate_check decides
/// validity. Throws DomainError ("infeasible degree") when no t <= n/2 works.
LPCertificate mrrw_certificate(const kraw::SchemeParams& scheme, int d);

/// (n ln theta_L(C_q) + ln certified_value) / n from lp_solve at q'(q).
/// d in [1, n+1]; d = n+1 stands for infinite distance.
double finite_n_rate(int q, int n, int d);

struct FiniteRate {
  LPSolution solution;
  CheckReport check;
  LPBoundResult bound;  // from the certified value
};

FiniteRate finite_n_bound(int q, int n, int d);

/// Text format: line 1 "n q_prime d", line 2 Hhat_0..Hhat_n, 17 significant digits.
void write_certificate(std::ostream& os, const LPCertificate& cert);
LPCertificate read_certificate(std::istream& is);

}  // namespace cyclecodes::lpbound
