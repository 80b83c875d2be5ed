#include "cyclecodes/lp_bound.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "cyclecodes/bounds.hpp"
#include "cyclecodes/errors.hpp"
#include "cyclecodes/simplex.hpp"

namespace cyclecodes::lpbound {

namespace {

void require_distance(const kraw::SchemeParams& s, int d) {
  if (d < 1 || d > s.n + 1) throw DomainError("target distance must lie in [1, n+1]");
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

LPBoundResult make_bound(double value, int n, double theta_l) {
  LPBoundResult r;
  r.value = value;
  r.log_bound = n * std::log(theta_l) + std::log(value);
  r.rate = r.log_bound / n;
  return r;
}

double certificate_value(const LPCertificate& cert) {
  const auto h = kraw::evaluate_expansion(cert.scheme, cert.coeffs);
  return h[0] / cert.coeffs[0];
}

CheckReport certificate_check(const LPCertificate& cert, const CheckOptions& opts) {
  CheckReport rep;
  const auto& s = cert.scheme;
  try {
    s.validate();
    require_distance(s, cert.d);
  } catch (const DomainError& e) {
    rep.reason = e.what();
    return rep;
  }
  if (cert.coeffs.size() != static_cast<std::size_t>(s.n) + 1) {
    rep.reason = "coefficient count differs from n+1";
    return rep;
  }
  const auto h = kraw::evaluate_expansion(s, cert.coeffs);
  // Rounding in H(u) is relative to the terms being summed, not to H(u).
  double term_scale = max_abs(cert.coeffs);
  for (int u = 0; u <= s.n; ++u) {
    const auto col = kraw::kraw_column(s, u);
    double acc = 0.0;
    for (std::size_t l = 0; l < col.size(); ++l) acc += std::abs(cert.coeffs[l] * col[l]);
    term_scale = std::max(term_scale, acc);
  }
  rep.abs_tol = opts.rel_tol * term_scale;
  double neg = 0.0;  // c: largest negative coefficient magnitude (l >= 1)
  for (std::size_t l = 1; l < cert.coeffs.size(); ++l) neg = std::max(neg, -cert.coeffs[l]);
  double pos = 0.0;  // eps: largest positive H(u) on [d, n]
  for (int u = cert.d; u <= s.n; ++u) pos = std::max(pos, h[static_cast<std::size_t>(u)]);
  rep.max_violation = std::max(neg, pos);
  rep.raw_value = cert.coeffs[0] != 0.0 ? h[0] / cert.coeffs[0] : std::numeric_limits<double>::infinity();

  const double denom = cert.coeffs[0] + neg - pos;
  if (!(cert.coeffs[0] > 0.0)) {
    rep.reason = "Hhat_0 is not positive";
  } else if (neg > rep.abs_tol) {
    rep.reason = "negative coefficient beyond tolerance";
  } else if (pos > rep.abs_tol) {
    rep.reason = "H(u) > 0 for some u >= d beyond tolerance";
  } else if (!(denom > 0.0)) {
    rep.reason = "repaired Hhat_0 is not positive";
  }
  if (!rep.reason.empty()) return rep;

  rep.feasible = true;
  rep.certified_value = (h[0] + neg * std::pow(s.q_prime, s.n) - pos) / denom;
  rep.certified_value = std::max(rep.certified_value, rep.raw_value);
  return rep;
}

LPSolution lp_solve(const kraw::SchemeParams& scheme, int d) {
  scheme.validate();
  require_distance(scheme, d);
  const int n = scheme.n;
  LPSolution out;
  out.cert.scheme = scheme;
  out.cert.d = d;
  out.cert.coeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
  out.cert.coeffs[0] = 1.0;
  if (d == n + 1) {
    out.value = 1.0;
    return out;
  }

  // Variables x_l = Hhat_l K_l(0), l = 1..n, so columns are K_l(u)/K_l(0).
  std::vector<double> k0(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) k0[static_cast<std::size_t>(l)] = kraw::scheme_weight(scheme, l);

  lp::LinearProgram prog;
  prog.objective.assign(static_cast<std::size_t>(n), 1.0);
  for (int u = d; u <= n; ++u) {
    const auto col = kraw::kraw_column(scheme, u);
    lp::Constraint row;
    row.coeffs.resize(static_cast<std::size_t>(n));
    double scale = 0.0;
    for (int l = 1; l <= n; ++l) {
      const double v = col[static_cast<std::size_t>(l)] / k0[static_cast<std::size_t>(l)];
      row.coeffs[static_cast<std::size_t>(l - 1)] = v;
      scale = std::max(scale, std::abs(v));
    }
    // 1 + sum_l x_l k_l(u) <= 0
    row.rhs = -1.0;
    row.sense = lp::Sense::less_equal;
    if (scale > 0.0) {
      for (double& v : row.coeffs) v /= scale;
      row.rhs /= scale;
    }
    prog.rows.push_back(std::move(row));
  }

  lp::SimplexSolver solver;
  const auto res = solver.solve(prog);
  out.iterations = res.iterations;
  if (res.status != lp::Status::optimal)
    throw NumericalError(std::string("LP solve failed: ") + lp::to_string(res.status) + " (" +
                         res.diagnostics + ")");
  for (int l = 1; l <= n; ++l)
    out.cert.coeffs[static_cast<std::size_t>(l)] =
        res.x[static_cast<std::size_t>(l - 1)] / k0[static_cast<std::size_t>(l)];
  out.value = certificate_value(out.cert);
  return out;
}

namespace {

// H values of the Christoffel-Darboux polynomial at integer u = 0..n.
std::vector<double> cd_values(const kraw::SchemeParams& s, int t, double a) {
  const auto ka = kraw::kraw_column(s, a);
  const double kt_a = ka[static_cast<std::size_t>(t)];
  const double kt1_a = ka[static_cast<std::size_t>(t) + 1];
  std::vector<double> h(static_cast<std::size_t>(s.n) + 1);
  for (int u = 0; u <= s.n; ++u) {
    if (std::abs(a - u) < 1e-13) {
      h[static_cast<std::size_t>(u)] = 0.0;
      continue;
    }
    const auto ku = kraw::kraw_column(s, u);
    const double num = kt_a * ku[static_cast<std::size_t>(t) + 1] - kt1_a * ku[static_cast<std::size_t>(t)];
    h[static_cast<std::size_t>(u)] = num * num / (a - u);
  }
  return h;
}

struct CdCandidate {
  double a = 0.0;
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> coeffs;
};

CdCandidate cd_candidate(const kraw::SchemeParams& s, int t, double a) {
  CdCandidate c;
  c.a = a;
  c.coeffs = kraw::coeff_extract(s, cd_values(s, t, a));
  if (c.coeffs[0] > 0.0) {
    const double h0 = kraw::evaluate_expansion(s, c.coeffs)[0];
    c.value = h0 / c.coeffs[0];
  }
  return c;
}

}  // namespace

LPCertificate mrrw_certificate(const kraw::SchemeParams& scheme, int d) {
  scheme.validate();
  if (d < 1 || d > scheme.n) throw DomainError("MRRW certificate needs 1 <= d <= n");
  const int n = scheme.n;

  int t = -1;
  double root_t = std::numeric_limits<double>::infinity();  // first root of K_t (K_0 has none)
  double root_t1 = 0.0;
  for (int cand = 0; 2 * cand <= n && cand + 1 <= n; ++cand) {
    const double r = kraw::kraw_first_root(scheme, cand + 1);
    if (r < d) {
      t = cand;
      root_t1 = r;
      break;
    }
    root_t = r;
  }
  if (t < 0) throw DomainError("infeasible degree: no t <= n/2 has a root of K_{t+1} below d");

  const double lo = root_t1;
  const double hi = std::min(static_cast<double>(d), root_t);
  auto value_at = [&](double a) { return cd_candidate(scheme, t, a); };

  // Start from the midpoint, then golden-section over (lo, hi].
  CdCandidate best = value_at(0.5 * (lo + hi));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo + 1e-9 * (hi - lo), b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  CdCandidate c1 = value_at(x1), c2 = value_at(x2);
  while (b - a > 1e-9 * std::max(1.0, hi)) {
    if (c1.value <= c2.value) {
      b = x2;
      x2 = x1;
      c2 = std::move(c1);
      x1 = b - inv_phi * (b - a);
      c1 = value_at(x1);
    } else {
      a = x1;
      x1 = x2;
      c1 = std::move(c2);
      x2 = a + inv_phi * (b - a);
      c2 = value_at(x2);
    }
  }
  for (CdCandidate* c : {&c1, &c2}) {
    if (c->value < best.value || (c->value == best.value && c->a < best.a)) best = *c;
  }
  // The closed end a = hi is admissible when hi = d (then H(d) = 0).
  if (hi == static_cast<double>(d)) {
    CdCandidate end = value_at(hi);
    if (end.value < best.value) best = std::move(end);
  }
  if (!std::isfinite(best.value)) throw NumericalError("MRRW construction produced Hhat_0 <= 0");

  LPCertificate cert;
  cert.scheme = scheme;
  cert.d = d;
  cert.coeffs = std::move(best.coeffs);
  const double h0 = cert.coeffs[0];
  for (double& c : cert.coeffs) c /= h0;
  cert.coeffs[0] = 1.0;
  return cert;
}

FiniteRate finite_n_bound(int q, int n, int d) {
  const auto p = bounds::cycle_params(q);
  if (!p.odd) throw DomainError("finite_n_rate needs odd q");
  kraw::SchemeParams s{n, *p.q_prime};
  s.validate();
  FiniteRate fr;
  fr.solution = lp_solve(s, d);
  fr.check = certificate_check(fr.solution.cert);
  if (!fr.check.feasible)
    throw NumericalError("LP certificate failed verification: " + fr.check.reason);
  fr.bound = make_bound(fr.check.certified_value, n, *p.theta_l);
  return fr;
}

double finite_n_rate(int q, int n, int d) { return finite_n_bound(q, n, d).bound.rate; }

void write_certificate(std::ostream& os, const LPCertificate& cert) {
  const auto old_prec = os.precision(17);
  os << cert.scheme.n << ' ' << cert.scheme.q_prime << ' ' << cert.d << '\n';
  for (std::size_t i = 0; i < cert.coeffs.size(); ++i) {
    if (i) os << ' ';
    os << cert.coeffs[i];
  }
  os << '\n';
  os.precision(old_prec);
}

LPCertificate read_certificate(std::istream& is) {
  std::string line;
  LPCertificate cert;
  if (!std::getline(is, line)) throw ParseError("missing header", 1);
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> cert.scheme.n >> cert.scheme.q_prime >> cert.d) || (hs >> extra))
      throw ParseError("header must be \"n q_prime d\"", 1);
  }
  try {
    cert.scheme.validate();
    require_distance(cert.scheme, cert.d);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1);
  }
  if (!std::getline(is, line)) throw ParseError("missing coefficient line", 2);
  std::istringstream cs(line);
  double v;
  while (cs >> v) cert.coeffs.push_back(v);
  if (!cs.eof()) throw ParseError("malformed coefficient", 2);
  if (cert.coeffs.size() != static_cast<std::size_t>(cert.scheme.n) + 1)
    throw ParseError("expected n+1 coefficients", 2);
  while (std::getline(is, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw ParseError("trailing content", 3);
  return cert;
}

}  // namespace cyclecodes::lpbound
