#pragma once

// Krawtchouk polynomials K_l(u; q') of the Hamming scheme, with the alphabet
// parameter q' allowed to be any real number > 1.
//
//   K_l(u; q') = sum_{j=0}^{l} (-1)^j (q'-1)^{l-j} C(u, j) C(n-u, l-j)
//
// Orthogonality weights are w(u) = C(n,u) (q'-1)^u and the squared norms are
// h_l = q'^n C(n,l) (q'-1)^l.

#include <span>
#include <vector>

namespace cyclecodes::kraw {

struct SchemeParams {
  int n = 1;
  double q_prime = 2.0;

  /// Throws DomainError unless n >= 1 and q_prime > 1.
  void validate() const;
};

/// Generalized binomial coefficient x (x-1) ... (x-j+1) / j! for real x.
double real_binomial(double x, int j);

/// K_l(u) by the forward three-term recurrence in l.
double kraw_eval(const SchemeParams& s, int ell, double u);

/// K_0(u), ..., K_n(u) by the recurrence.
std::vector<double> kraw_column(const SchemeParams& s, double u);

/// K_l(u) from the explicit alternating sum, accumulated in long double.
/// Kept as an independent cross-check of the recurrence.
double kraw_eval_explicit(const SchemeParams& s, int ell, double u);

/// Orthogonality weight C(n,u) (q'-1)^u.
double scheme_weight(const SchemeParams& s, int u);

/// Squared norm q'^n C(n,l) (q'-1)^l.
double kraw_norm(const SchemeParams& s, int ell);

/// Natural magnitude of K_l(u): sqrt(h_l / w(u)). The matrix
/// K_l(u) / scale(l,u) is orthogonal, so its entries lie in [-1, 1].
double kraw_scale(const SchemeParams& s, int ell, int u);

/// Smallest root of K_l in (0, n), located by a sign scan and refined by
/// bisection to 1e-10. Throws NumericalError if no sign change is found.
double kraw_first_root(const SchemeParams& s, int ell);

/// H(u) = sum_l coeffs[l] K_l(u) at u = 0..n.
std::vector<double> evaluate_expansion(const SchemeParams& s, std::span<const double> coeffs);

/// Inverse of evaluate_expansion via orthogonality:
///   coeff_l = h_l^{-1} sum_u w(u) H(u) K_l(u).
std::vector<double> coeff_extract(const SchemeParams& s, std::span<const double> h_values);

/// E[H(U)] for U ~ Binomial(n, 1 - 1/q'), summed directly over u. By
/// orthogonality it equals coeffs[0].
double binomial_diagnostic(const SchemeParams& s, std::span<const double> coeffs);

}  // namespace cyclecodes::kraw
