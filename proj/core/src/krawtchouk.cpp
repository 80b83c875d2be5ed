#include "cyclecodes/krawtchouk.hpp"

#include <cmath>
#include <string>

#include "cyclecodes/errors.hpp"

namespace cyclecodes::kraw {

namespace {

void require_degree(const SchemeParams& s, int ell) {
  if (ell < 0 || ell > s.n)
    throw DomainError("Krawtchouk degree " + std::to_string(ell) + " outside [0, n]");
}

long double real_binomial_ld(long double x, int j) {
  long double r = 1.0L;
  for (int i = 0; i < j; ++i) r *= (x - i) / (i + 1);
  return r;
}

}  // namespace

void SchemeParams::validate() const {
  if (n < 1) throw DomainError("scheme length must be at least 1");
  if (!(q_prime > 1.0) || !std::isfinite(q_prime)) throw DomainError("q' must exceed 1");
}

double real_binomial(double x, int j) {
  if (j < 0) return 0.0;
  return static_cast<double>(real_binomial_ld(x, j));
}

std::vector<double> kraw_column(const SchemeParams& s, double u) {
  s.validate();
  const double q = s.q_prime;
  const int n = s.n;
  std::vector<double> k(static_cast<std::size_t>(n) + 1);
  k[0] = 1.0;
  k[1] = n * (q - 1.0) - q * u;
  // (l+1) K_{l+1} = [(n-l)(q-1) + l - q u] K_l - (q-1)(n-l+1) K_{l-1}
  for (int l = 1; l < n; ++l) {
    const auto i = static_cast<std::size_t>(l);
    k[i + 1] = (((n - l) * (q - 1.0) + l - q * u) * k[i] - (q - 1.0) * (n - l + 1) * k[i - 1]) /
               (l + 1);
  }
  return k;
}

double kraw_eval(const SchemeParams& s, int ell, double u) {
  s.validate();
  require_degree(s, ell);
  if (ell == 0) return 1.0;
  return kraw_column(s, u)[static_cast<std::size_t>(ell)];
}

double kraw_eval_explicit(const SchemeParams& s, int ell, double u) {
  s.validate();
  require_degree(s, ell);
  const long double qm1 = static_cast<long double>(s.q_prime) - 1.0L;
  const long double ul = u;
  long double sum = 0.0L;
  for (int j = 0; j <= ell; ++j) {
    const long double term = real_binomial_ld(ul, j) *
                             real_binomial_ld(static_cast<long double>(s.n) - ul, ell - j) *
                             std::pow(qm1, static_cast<long double>(ell - j));
    sum += (j % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum);
}

double scheme_weight(const SchemeParams& s, int u) {
  return real_binomial(s.n, u) * std::pow(s.q_prime - 1.0, u);
}

double kraw_norm(const SchemeParams& s, int ell) {
  return std::pow(s.q_prime, s.n) * real_binomial(s.n, ell) * std::pow(s.q_prime - 1.0, ell);
}

double kraw_scale(const SchemeParams& s, int ell, int u) {
  return std::sqrt(kraw_norm(s, ell) / scheme_weight(s, u));
}

double kraw_first_root(const SchemeParams& s, int ell) {
  s.validate();
  if (ell < 1 || ell > s.n) throw DomainError("root search needs 1 <= l <= n");
  if (ell == 1) return s.n * (1.0 - 1.0 / s.q_prime);

  // Zeros of Krawtchouk polynomials are more than one unit apart, so a scan
  // with step 1/8 cannot step over a pair of sign changes.
  constexpr int kSub = 8;
  double lo = 0.0;
  double flo = kraw_eval(s, ell, lo);
  for (int i = 1; i <= kSub * s.n; ++i) {
    const double hi = static_cast<double>(i) / kSub;
    const double fhi = kraw_eval(s, ell, hi);
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) != (fhi > 0.0)) {
      double a = lo, b = hi, fa = flo;
      while (b - a > 1e-10) {
        const double m = 0.5 * (a + b);
        const double fm = kraw_eval(s, ell, m);
        if (fm == 0.0) return m;
        if ((fa > 0.0) == (fm > 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      return 0.5 * (a + b);
    }
    lo = hi;
    flo = fhi;
  }
  throw NumericalError("no sign change found for K_" + std::to_string(ell));
}

std::vector<double> evaluate_expansion(const SchemeParams& s, std::span<const double> coeffs) {
  s.validate();
  if (coeffs.size() != static_cast<std::size_t>(s.n) + 1)
    throw DomainError("expansion needs n+1 coefficients");
  std::vector<double> h(coeffs.size(), 0.0);
  for (int u = 0; u <= s.n; ++u) {
    const auto col = kraw_column(s, u);
    double acc = 0.0;
    for (std::size_t l = 0; l < coeffs.size(); ++l) acc += coeffs[l] * col[l];
    h[static_cast<std::size_t>(u)] = acc;
  }
  return h;
}

std::vector<double> coeff_extract(const SchemeParams& s, std::span<const double> h_values) {
  s.validate();
  if (h_values.size() != static_cast<std::size_t>(s.n) + 1)
    throw DomainError("coefficient extraction needs H(0..n)");
  std::vector<double> acc(h_values.size(), 0.0);
  for (int u = 0; u <= s.n; ++u) {
    const auto col = kraw_column(s, u);
    const double wh = scheme_weight(s, u) * h_values[static_cast<std::size_t>(u)];
    for (std::size_t l = 0; l < acc.size(); ++l) acc[l] += wh * col[l];
  }
  for (int l = 0; l <= s.n; ++l) acc[static_cast<std::size_t>(l)] /= kraw_norm(s, l);
  return acc;
}

double binomial_diagnostic(const SchemeParams& s, std::span<const double> coeffs) {
  const auto h = evaluate_expansion(s, coeffs);
  const double p = 1.0 - 1.0 / s.q_prime;
  double e = 0.0;
  for (int u = 0; u <= s.n; ++u)
    e += real_binomial(s.n, u) * std::pow(p, u) * std::pow(1.0 - p, s.n - u) *
         h[static_cast<std::size_t>(u)];
  return e;
}

}  // namespace cyclecodes::kraw
