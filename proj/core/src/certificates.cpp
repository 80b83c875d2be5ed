#include "cyclecodes/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "cyclecodes/bounds.hpp"
#include "cyclecodes/errors.hpp"
#include "cyclecodes/krawtchouk.hpp"
#include "cyclecodes/psd.hpp"

namespace cyclecodes::certs {

namespace {

std::string format_violation(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << (v == 0.0 ? 0.0 : v);
  return os.str();
}

void require_odd(int q) {
  if (q < 3 || q % 2 == 0) throw DomainError("q must be odd and >= 3");
}

// Records a check and throws on failure.
void enforce(VerificationReport* report, const std::string& name, bool pass, double violation) {
  if (report) report->add(name, pass, violation);
  if (!pass) throw CertificateRejected(name, violation);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_value(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end());
}

// Number of coordinates of x equal to +-s mod q, or -1 if some coordinate is
// outside {0, +-s}.
int count_pm(const std::vector<int>& x, int q, int s) {
  int count = 0;
  for (int v : x) {
    if (v == 0) continue;
    if (v == s % q || v == (q - s % q) % q) {
      ++count;
    } else {
      return -1;
    }
  }
  return count;
}

codes::ExtDist metric_dist(const std::vector<int>& diff, int q, Metric metric) {
  std::int64_t total = 0;
  for (int v : diff) {
    if (v == 0) continue;
    if (metric == Metric::hamming || v == 1 || v == q - 1) {
      ++total;
    } else {
      return codes::ExtDist::infinite();
    }
  }
  return codes::ExtDist(total);
}

}  // namespace

CertificateRejected::CertificateRejected(const std::string& clause, double violation)
    : std::runtime_error("certificate rejected: " + clause + " (violation " +
                         format_violation(violation) + ")"),
      clause_(clause),
      violation_(violation) {}

void VerificationReport::add(std::string name, bool pass, double violation) {
  lines.push_back({std::move(name), pass, violation});
}

bool VerificationReport::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

void VerificationReport::append(const VerificationReport& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

void VerificationReport::print(std::ostream& os) const {
  for (const auto& l : lines)
    os << "CHECK " << l.name << ' ' << (l.pass ? "PASS" : "FAIL") << ' '
       << format_violation(l.violation) << '\n';
}

EntryConstraint multiply_constraints(EntryConstraint a, EntryConstraint b) {
  using C = EntryConstraint;
  if (a == C::zero || b == C::zero) return C::zero;
  if (a == C::free || b == C::free) return C::free;
  return a == b ? C::nonnegative : C::nonpositive;
}

double MatrixCert::max_diagonal() const {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) best = std::max(best, at(i, i));
  return best;
}

MatrixCert all_ones_cert(std::size_t m) {
  if (m == 0) throw DomainError("empty certificate");
  return {m, std::vector<double>(m * m, 1.0), std::vector<EntryConstraint>(m * m, EntryConstraint::nonnegative)};
}

VerificationReport verify_matrix_cert(const MatrixCert& cert) {
  const std::size_t m = cert.m;
  if (m == 0 || cert.d.size() != m * m || cert.constraints.size() != m * m)
    throw DomainError("certificate matrix is not m x m");
  const double scale = std::max(1.0, max_abs(cert.d));

  double asym = 0.0;
  double bad = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double v = cert.at(i, j);
      asym = std::max(asym, std::abs(v - cert.at(j, i)));
      switch (cert.constraints[i * m + j]) {
        case EntryConstraint::free: break;
        case EntryConstraint::nonnegative: bad = std::max(bad, -v); break;
        case EntryConstraint::nonpositive: bad = std::max(bad, v); break;
        case EntryConstraint::zero: bad = std::max(bad, std::abs(v)); break;
      }
    }
  }

  std::vector<double> shifted(cert.d);
  for (double& v : shifted) v -= 1.0;
  const double lam = min_eigenvalue(shifted, m);
  const double psd_tol = 1e-8 * static_cast<double>(m);

  VerificationReport r;
  r.add("symmetric", asym <= 1e-10 * scale, asym);
  r.add("entry-constraints", bad <= 1e-10 * scale, std::max(bad, 0.0));
  r.add("psd-D-minus-J", lam >= -psd_tol, std::max(-lam, 0.0));
  return r;
}

std::vector<double> CirculantCert::spectrum_minus_j() const {
  std::vector<double> s(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k)
    s[static_cast<std::size_t>(k)] =
        d0 + 2.0 * d1 * std::cos(2.0 * std::numbers::pi * k / q) - (k == 0 ? q : 0);
  return s;
}

MatrixCert CirculantCert::to_matrix() const {
  const auto m = static_cast<std::size_t>(q);
  MatrixCert c{m, std::vector<double>(m * m, 0.0),
               std::vector<EntryConstraint>(m * m, EntryConstraint::zero)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t diff = (j + m - i) % m;
      if (diff == 0) {
        c.d[i * m + j] = d0;
      } else if (diff == 1 || diff == m - 1) {
        c.d[i * m + j] = d1;
      } else {
        continue;
      }
      c.constraints[i * m + j] = EntryConstraint::nonnegative;
    }
  }
  return c;
}

CirculantCert lovasz_circulant(int q) {
  require_odd(q);
  const double c = std::cos(std::numbers::pi / q);
  CirculantCert cert{q, q * c / (1.0 + c), q / (2.0 * (1.0 + c))};
  if (!verify_circulant(cert).all_pass()) throw NumericalError("circulant witness failed its own check");
  return cert;
}

VerificationReport verify_circulant(const CirculantCert& cert) {
  require_odd(cert.q);
  const auto params = bounds::cycle_params(cert.q);
  const double c = std::cos(std::numbers::pi / cert.q);
  const double d0_err = std::abs(cert.d0 - *params.theta_l);
  const double d1_err = std::abs(cert.d1 - cert.q / (2.0 * (1.0 + c)));
  const auto spec = cert.spectrum_minus_j();
  const double lam = *std::min_element(spec.begin(), spec.end());
  const double neg = std::min({cert.d0, cert.d1, 0.0});

  VerificationReport r;
  r.add("circulant-d0", d0_err <= 1e-12, d0_err);
  r.add("circulant-d1", d1_err <= 1e-12, d1_err);
  r.add("circulant-nonnegative", neg >= 0.0, -neg);
  r.add("circulant-spectrum", lam >= -1e-10, std::max(-lam, 0.0));
  return r;
}

MatrixCert tensor_power(const MatrixCert& base, int n) {
  if (n < 1) throw DomainError("tensor power needs n >= 1");
  double total = 1.0;
  for (int i = 0; i < n; ++i) total *= static_cast<double>(base.m);
  if (total > static_cast<double>(kMatrixBudget))
    throw BudgetExceeded("tensor power exceeds the matrix budget");

  MatrixCert out = base;
  for (int p = 1; p < n; ++p) {
    const std::size_t a = out.m, b = base.m, m = a * b;
    MatrixCert next{m, std::vector<double>(m * m), std::vector<EntryConstraint>(m * m)};
    for (std::size_t i1 = 0; i1 < a; ++i1)
      for (std::size_t j1 = 0; j1 < a; ++j1)
        for (std::size_t i2 = 0; i2 < b; ++i2)
          for (std::size_t j2 = 0; j2 < b; ++j2) {
            const std::size_t idx = (i1 * b + i2) * m + (j1 * b + j2);
            next.d[idx] = out.d[i1 * a + j1] * base.d[i2 * b + j2];
            next.constraints[idx] =
                multiply_constraints(out.constraints[i1 * a + j1], base.constraints[i2 * b + j2]);
          }
    out = std::move(next);
  }
  return out;
}

MatrixCert schur_combine(const MatrixCert& a, const MatrixCert& b, VerificationReport* report) {
  if (a.m != b.m || a.d.size() != b.d.size()) throw DomainError("certificate sizes differ");
  MatrixCert out{a.m, std::vector<double>(a.d.size()), std::vector<EntryConstraint>(a.d.size())};
  for (std::size_t i = 0; i < a.d.size(); ++i) {
    out.d[i] = a.d[i] * b.d[i];
    out.constraints[i] = multiply_constraints(a.constraints[i], b.constraints[i]);
  }
  const auto r = verify_matrix_cert(out);
  if (report) report->append(r);
  for (const auto& line : r.lines)
    if (!line.pass) throw CertificateRejected(line.name, line.violation);
  return out;
}

double function_bound(const FourierTable& f) {
  const double qn = static_cast<double>(f.size());
  return qn * f.values[0] / f.transform[0];
}

FourierTable build_g(int q, int n, VerificationReport* report) {
  require_odd(q);
  const std::size_t size = fourier::table_size(q, n);
  const double phi = 1.0 / (2.0 * std::cos(std::numbers::pi / q));

  std::vector<double> values(size);
  for (std::size_t i = 0; i < size; ++i) {
    const int u = count_pm(fourier::index_symbols(q, n, i), q, 1);
    values[i] = u < 0 ? 0.0 : std::pow(phi, u);
  }
  FourierTable g = fourier::dft(q, n, values);

  const double top = max_value(g.transform);
  const double low = *std::min_element(g.transform.begin(), g.transform.end());
  const int c = (q - 1) / 2;
  double zero_err = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const auto w = fourier::index_symbols(q, n, i);
    if (std::any_of(w.begin(), w.end(), [&](int v) { return v == c || v == q - c; }))
      zero_err = std::max(zero_err, std::abs(g.transform[i]));
  }
  const double theta = *bounds::cycle_params(q).theta_l;
  const double ratio_err = std::abs(function_bound(g) / std::pow(theta, n) - 1.0);
  const double planch = fourier::plancherel_residual(g);

  enforce(report, "g-hat-nonnegative", low >= -1e-12 * std::max(1.0, top), std::max(-low, 0.0));
  enforce(report, "g-hat-zero-set", zero_err <= 1e-12 * std::max(1.0, top), zero_err);
  enforce(report, "g-lovasz-ratio", ratio_err <= 1e-10, ratio_err);
  enforce(report, "g-plancherel", planch <= 1e-9, planch);
  return g;
}

SphereCheck verify_sphere_transform(int q, int n, int ell, int u) {
  require_odd(q);
  if (ell < 0 || ell > n || u < 0 || u > n) throw DomainError("ell and u must lie in [0, n]");
  const std::size_t size = fourier::table_size(q, n);
  const int c = (q - 1) / 2;

  std::vector<double> indicator(size);
  for (std::size_t i = 0; i < size; ++i)
    indicator[i] = count_pm(fourier::index_symbols(q, n, i), q, c) == ell ? 1.0 : 0.0;
  const FourierTable t = fourier::dft(q, n, indicator);

  const double two_cos = 2.0 * std::cos(std::numbers::pi / q);
  const kraw::SchemeParams scheme{n, *bounds::cycle_params(q).q_prime};
  SphereCheck out;
  out.formula = std::pow(two_cos, ell) * kraw::kraw_eval(scheme, ell, u);

  std::vector<int> probe(static_cast<std::size_t>(n), 0);
  std::fill_n(probe.begin(), u, 1);
  out.direct = t.transform[codes::word_index(codes::Word(q, probe))];

  for (std::size_t i = 0; i < size; ++i) {
    if (count_pm(fourier::index_symbols(q, n, i), q, 1) != u) continue;
    const double err = std::abs(t.transform[i] - out.formula) / std::max(1.0, std::abs(out.formula));
    out.max_rel_error = std::max(out.max_rel_error, err);
  }
  return out;
}

FourierTable build_f(int q, int n, const lpbound::LPCertificate& cert, VerificationReport* report) {
  require_odd(q);
  const auto params = bounds::cycle_params(q);
  if (cert.scheme.n != n) throw DomainError("certificate length does not match n");
  if (std::abs(cert.scheme.q_prime - *params.q_prime) > 1e-12 * *params.q_prime)
    throw DomainError("certificate alphabet does not match q'(q)");
  if (cert.coeffs.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("certificate needs n+1 coefficients");
  if (!(cert.coeffs[0] > 0.0)) throw DomainError("certificate needs Hhat_0 > 0");

  const std::size_t size = fourier::table_size(q, n);
  const double qn = static_cast<double>(size);
  const double two_cos = 2.0 * std::cos(std::numbers::pi / q);
  const int c = (q - 1) / 2;

  std::vector<double> hhat(size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    const int ell = count_pm(fourier::index_symbols(q, n, i), q, c);
    if (ell >= 0)
      hhat[i] = qn * cert.coeffs[static_cast<std::size_t>(ell)] / std::pow(two_cos, ell);
  }
  // The sets S_l^c are symmetric, so the forward transform inverts up to q^n.
  const FourierTable h_t = fourier::dft(q, n, hhat);
  const FourierTable g = build_g(q, n, report);

  std::vector<double> values(size);
  for (std::size_t i = 0; i < size; ++i) values[i] = g.values[i] * h_t.transform[i] / qn;
  FourierTable f = fourier::dft(q, n, values);

  const double top = max_value(f.transform);
  const double low = *std::min_element(f.transform.begin(), f.transform.end());

  double far = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const auto x = fourier::index_symbols(q, n, i);
    if (metric_dist(x, q, Metric::cycle) >= codes::ExtDist(cert.d)) far = std::max(far, f.values[i]);
  }

  const double expected_f0 = g.transform[0] * hhat[0] / qn;
  const double f0_err = std::abs(f.transform[0] - expected_f0) / std::abs(expected_f0);
  const double expected_bound =
      std::pow(*params.theta_l, n) * lpbound::certificate_value(cert);
  const double bound_err = std::abs(function_bound(f) - expected_bound) / std::abs(expected_bound);
  const double planch = fourier::plancherel_residual(f);

  enforce(report, "f-hat-nonnegative", low >= -1e-8 * top, std::max(-low, 0.0));
  enforce(report, "f-far-nonpositive", far <= 1e-10 * cert.coeffs[0], std::max(far, 0.0));
  enforce(report, "f-hat-zero-frequency", f0_err <= 1e-9, f0_err);
  enforce(report, "f-bound-factorization", bound_err <= 1e-8, bound_err);
  enforce(report, "f-plancherel", planch <= 1e-9, planch);
  return f;
}

FourierTable hamming_lp_function(int q, int n, const lpbound::LPCertificate& cert) {
  if (q < 2) throw DomainError("q must be >= 2");
  if (cert.scheme.n != n || std::abs(cert.scheme.q_prime - q) > 1e-12 * q)
    throw DomainError("certificate scheme does not match (q, n)");
  if (cert.coeffs.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("certificate needs n+1 coefficients");

  const std::size_t size = fourier::table_size(q, n);
  std::vector<double> by_weight(static_cast<std::size_t>(n) + 1);
  for (int u = 0; u <= n; ++u) {
    const auto col = kraw::kraw_column(cert.scheme, u);
    double s = 0.0;
    for (int l = 0; l <= n; ++l) s += cert.coeffs[static_cast<std::size_t>(l)] * col[static_cast<std::size_t>(l)];
    by_weight[static_cast<std::size_t>(u)] = s;
  }
  std::vector<double> values(size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto x = fourier::index_symbols(q, n, i);
    const auto wt = std::count_if(x.begin(), x.end(), [](int v) { return v != 0; });
    values[i] = by_weight[static_cast<std::size_t>(wt)];
  }
  return fourier::dft(q, n, values);
}

MatrixCert cert_from_function(const FourierTable& f, codes::ExtDist d, Metric metric,
                              VerificationReport* report) {
  const int q = f.q, n = f.n;
  const std::size_t m = f.size();
  if (m > kMatrixBudget) throw BudgetExceeded("q^n exceeds the matrix budget");

  const double top = max_value(f.transform);
  const double low = *std::min_element(f.transform.begin(), f.transform.end());
  enforce(report, "function-hat-nonnegative", low >= -1e-8 * std::abs(top), std::max(-low, 0.0));
  enforce(report, "function-hat-zero-positive", f.transform[0] > 0.0,
          std::max(-f.transform[0], 0.0));

  const double scale = static_cast<double>(m) / f.transform[0];
  std::vector<EntryConstraint> by_diff(m, EntryConstraint::free);
  for (std::size_t i = 0; i < m; ++i)
    if (metric_dist(fourier::index_symbols(q, n, i), q, metric) >= d)
      by_diff[i] = EntryConstraint::nonpositive;

  std::vector<codes::Word> words;
  words.reserve(m);
  for (std::size_t i = 0; i < m; ++i) words.push_back(codes::word_at(q, n, i));

  MatrixCert out{m, std::vector<double>(m * m), std::vector<EntryConstraint>(m * m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = codes::word_index(words[i] - words[j]);
      out.d[i * m + j] = scale * f.values[k];
      out.constraints[i * m + j] = by_diff[k];
    }
  }
  const auto r = verify_matrix_cert(out);
  if (report) report->append(r);
  for (const auto& line : r.lines)
    if (!line.pass) throw CertificateRejected(line.name, line.violation);
  return out;
}

}  // namespace cyclecodes::certs
