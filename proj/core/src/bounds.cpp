#include "cyclecodes/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "cyclecodes/errors.hpp"

namespace cyclecodes::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

void require_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("delta must lie in [0,1]");
}

void require_q_real(double q_real) {
  if (!(q_real > 1.0) || !std::isfinite(q_real)) throw DomainError("alphabet size must exceed 1");
}

void require_odd_cycle(int q) {
  if (q < 3 || q % 2 == 0) throw DomainError("odd cycle order q >= 3 required");
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Binary entropy in bits.
double h2_bits(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -(xlogx(x) + xlogx(1.0 - x)) / kLn2;
}

double lp2_g(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return h2_bits((1.0 - std::sqrt(1.0 - x)) / 2.0);
}

double lp2_objective(double delta, double u) {
  const double u2 = u * u;
  return kLn2 * (1.0 + lp2_g(u2) - lp2_g(u2 + 2.0 * delta * u + 2.0 * delta));
}

}  // namespace

CycleParams cycle_params(int q) {
  if (q < 3) throw DomainError("cycle order must be at least 3");
  CycleParams p;
  p.q = q;
  p.odd = (q % 2) != 0;
  if (p.odd) {
    const double c = std::cos(kPi / q);
    p.q_prime = 1.0 + 1.0 / c;
    p.theta_l = q * c / (1.0 + c);
  }
  return p;
}

double entropy_hq(double x, double q_real) {
  require_q_real(q_real);
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("entropy argument must lie in [0,1]");
  return x * std::log(q_real - 1.0) - xlogx(x) - xlogx(1.0 - x);
}

double rate_gv(double q_real, double delta) {
  require_q_real(q_real);
  require_delta(delta);
  if (delta >= 1.0 - 1.0 / q_real) return 0.0;
  return std::max(0.0, std::log(q_real) - entropy_hq(delta, q_real));
}

double lp1_argument(double q_real, double delta) {
  require_q_real(q_real);
  require_delta(delta);
  if (delta >= 1.0 - 1.0 / q_real) return 0.0;
  const double arg = ((q_real - 1.0) - (q_real - 2.0) * delta -
                      2.0 * std::sqrt((q_real - 1.0) * delta * (1.0 - delta))) /
                     q_real;
  return std::clamp(arg, 0.0, 1.0 - 1.0 / q_real);
}

double rate_lp1(double q_real, double delta) {
  require_q_real(q_real);
  require_delta(delta);
  if (delta >= 1.0 - 1.0 / q_real) return 0.0;
  return entropy_hq(lp1_argument(q_real, delta), q_real);
}

double rate_lp2_binary(double delta) {
  require_delta(delta);
  if (delta >= 0.5) return 0.0;
  const double hi = 1.0 - 2.0 * delta;
  auto f = [delta](double u) { return lp2_objective(delta, u); };

  // Coarse scan to bracket the minimum, then golden-section refinement.
  constexpr int kScan = 64;
  int best = kScan;
  double best_val = f(hi);
  for (int i = 1; i < kScan; ++i) {
    const double v = f(hi * i / kScan);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = hi * std::max(best - 1, 0) / kScan;
  double b = hi * std::min(best + 1, kScan) / kScan;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-10) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  best_val = std::min({best_val, f1, f2});
  // u = 1 - 2 delta reproduces the first LP bound, so the result never exceeds it.
  best_val = std::min(best_val, f(hi));
  return std::max(0.0, best_val);
}

double upper_main(int q, double delta) {
  require_odd_cycle(q);
  const auto p = cycle_params(q);
  return std::log(*p.theta_l) + rate_lp1(*p.q_prime, delta);
}

double upper_schur(int q, double delta) {
  require_odd_cycle(q);
  const auto p = cycle_params(q);
  return std::log(*p.theta_l) + rate_lp1(static_cast<double>(q), delta);
}

double compose_binary(int m, const RateFunction& binary_curve, double delta) {
  if (m < 2) throw DomainError("compose_binary needs m >= 2");
  require_delta(delta);
  return std::log(m / 2.0) + binary_curve(delta);
}

double lower_pentagon(double delta) {
  require_delta(delta);
  const double inner = 2.0 * delta >= 1.0 ? 0.0 : rate_gv(5.0, 2.0 * delta);
  return 0.5 * std::log(5.0) + 0.5 * inner;
}

double lower_2r1(int r, double delta) {
  if (r < 2 || r > 30) throw DomainError("lower_2r1 needs 2 <= r <= 30");
  require_delta(delta);
  const double q = std::ldexp(1.0, r) + 1.0;
  const double scaled = r * delta;
  const double inner = scaled >= 1.0 ? 0.0 : rate_gv(q, scaled);
  return (r - 1.0) / r * std::log(q) + inner / r;
}

MaxEntropySolution weighted_gv_solve(const WeightTable& weights, double delta_w) {
  const int q = weights.q;
  if (q < 2 || weights.w.size() != static_cast<std::size_t>(q))
    throw DomainError("weight table size does not match alphabet");
  if (!weights.w[0] || *weights.w[0] != 0.0) throw DomainError("weight of 0 must be 0");
  if (!(delta_w >= 0.0)) throw DomainError("weighted distance must be nonnegative");

  std::vector<double> finite;  // weights of symbols with finite weight
  for (int x = 1; x < q; ++x) {
    const auto& wx = weights.w[static_cast<std::size_t>(x)];
    if (!wx) continue;
    if (!std::isfinite(*wx) || *wx < 0.0) throw DomainError("weights must be nonnegative");
    if (*wx == 0.0) throw DomainError("degenerate weight table: nonzero symbol of weight 0");
    finite.push_back(*wx);
  }

  const double ln_q = std::log(static_cast<double>(q));
  MaxEntropySolution sol;
  sol.distribution.assign(static_cast<std::size_t>(q), 0.0);

  // Z(lambda) and mean(lambda) over the finite-weight symbols (symbol 0 included).
  auto partition = [&](double lambda) {
    double z = 1.0, m = 0.0;
    for (double w : finite) {
      const double e = std::exp(-lambda * w);
      z += e;
      m += w * e;
    }
    return std::pair{z, m / z};
  };

  auto finish = [&](double lambda) {
    const auto [z, mean] = partition(lambda);
    sol.multiplier = lambda;
    sol.t = std::exp(-lambda);
    sol.entropy = lambda * mean + std::log(z);
    sol.rate = std::max(0.0, ln_q - sol.entropy);
    sol.distribution[0] = 1.0 / z;
    for (int x = 1; x < q; ++x) {
      const auto& wx = weights.w[static_cast<std::size_t>(x)];
      if (wx) sol.distribution[static_cast<std::size_t>(x)] = std::exp(-lambda * *wx) / z;
    }
    return sol;
  };

  if (delta_w == 0.0 || finite.empty()) {
    sol.multiplier = std::numeric_limits<double>::infinity();
    sol.t = 0.0;
    sol.entropy = 0.0;
    sol.rate = ln_q;
    sol.distribution[0] = 1.0;
    if (finite.empty()) return sol;
    return sol;
  }

  if (delta_w >= partition(0.0).second) return finish(0.0);

  double lo = 0.0, hi = 60.0;
  while (partition(hi).second > delta_w) {
    hi *= 2.0;
    if (hi > 1e6) throw NumericalError("multiplier search failed to bracket");
  }
  // Bisect until the bracket no longer shrinks in floating point.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (partition(mid).second > delta_w)
      lo = mid;
    else
      hi = mid;
  }
  const double lambda = 0.5 * (lo + hi);
  // Entropy at the active constraint: lambda * delta_w + ln Z(lambda).
  auto out = finish(lambda);
  out.entropy = lambda * delta_w + std::log(partition(lambda).first);
  out.rate = std::max(0.0, ln_q - out.entropy);
  return out;
}

double weighted_gv_rate(const WeightTable& weights, double delta_w) {
  return weighted_gv_solve(weights, delta_w).rate;
}

NineCycleClosedForm nine_cycle_closed_form(double delta_w) {
  if (!(delta_w >= 0.0)) throw DomainError("weighted distance must be nonnegative");
  NineCycleClosedForm out;
  if (delta_w >= 10.0 / 9.0) return out;
  if (delta_w == 0.0) {
    out.t = 0.0;
    out.rate = std::log(9.0);
    return out;
  }
  // Positive root of 2 t^2 (2-x) + 6 t (1-x) - x = 0, written without cancellation.
  const double x = delta_w;
  const double b = 6.0 * (1.0 - x);
  const double disc = b * b + 8.0 * x * (2.0 - x);
  const double t = 2.0 * x / (b + std::sqrt(disc));
  const double z = 1.0 + 6.0 * t + 2.0 * t * t;
  const double mean = (6.0 * t + 4.0 * t * t) / z;
  const double entropy = std::log(z) - mean * std::log(t);
  out.t = t;
  out.rate = std::max(0.0, std::log(9.0) - entropy);
  return out;
}

double lower_9cycle(double delta) {
  require_delta(delta);
  return 2.0 / 3.0 * std::log(9.0) +
         weighted_gv_rate(WeightTable::nine_cycle(), 3.0 * delta) / 3.0;
}

// ---------------------------------------------------------------------------

std::vector<double> make_grid(double lo, double hi, int steps) {
  if (steps < 1) throw DomainError("grid needs at least one point");
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) throw DomainError("grid must lie in [0,1]");
  if (steps > 1 && !(lo < hi)) throw DomainError("grid bounds must be increasing");
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    g[static_cast<std::size_t>(i)] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  if (steps > 1) g.back() = hi;
  return g;
}

BoundCurve sample_curve(std::string label, BoundKind kind, int q, const RateFunction& rate,
                        std::span<const double> grid) {
  BoundCurve c{std::move(label), kind, q, {}};
  c.points.reserve(grid.size());
  for (double d : grid) {
    if (!c.points.empty() && !(d > c.points.back().delta))
      throw DomainError("grid must be strictly increasing");
    c.points.push_back({d, rate(d)});
  }
  return c;
}

BoundCurve envelope(std::span<const BoundCurve> curves, BoundKind kind) {
  if (curves.empty()) throw DomainError("envelope of no curves");
  BoundCurve out = curves.front();
  out.kind = kind;
  out.label = kind == BoundKind::upper ? "upper-envelope" : "lower-envelope";
  if (curves.size() == 1) {
    out.label = curves.front().label;
    return out;
  }
  for (const auto& c : curves.subspan(1)) {
    if (c.q != out.q || c.points.size() != out.points.size())
      throw DomainError("envelope: curves disagree on q or grid");
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      if (c.points[i].delta != out.points[i].delta)
        throw DomainError("envelope: curves disagree on grid");
      out.points[i].rate = kind == BoundKind::upper ? std::min(out.points[i].rate, c.points[i].rate)
                                                    : std::max(out.points[i].rate, c.points[i].rate);
    }
  }
  return out;
}

const std::vector<std::string>& curve_ids() {
  static const std::vector<std::string> ids = {
      "upper-main",      "upper-schur",       "upper-prop2-lp1", "upper-prop2-lp2",
      "lower-prop2-gv",  "lower-gv-pentagon", "lower-2r1-gv",    "lower-9cycle"};
  return ids;
}

namespace {

// r with q = 2^r + 1, or 0.
int two_power_exponent(int q) {
  for (int r = 2; r <= 30; ++r)
    if ((1 << r) + 1 == q) return r;
  return 0;
}

}  // namespace

bool curve_applies(const std::string& id, int q) {
  if (q < 3) return false;
  const bool odd = q % 2 != 0;
  if (id == "upper-main" || id == "upper-schur") return odd;
  if (id == "upper-prop2-lp1" || id == "upper-prop2-lp2" || id == "lower-prop2-gv") return true;
  if (id == "lower-gv-pentagon") return q == 5;
  if (id == "lower-2r1-gv") return two_power_exponent(q) != 0;
  if (id == "lower-9cycle") return q == 9;
  return false;
}

BoundKind curve_kind(const std::string& id) {
  if (id.rfind("upper-", 0) == 0) return BoundKind::upper;
  if (id.rfind("lower-", 0) == 0) return BoundKind::lower;
  throw DomainError("unknown curve id: " + id);
}

RateFunction curve_by_id(const std::string& id, int q) {
  if (std::find(curve_ids().begin(), curve_ids().end(), id) == curve_ids().end())
    throw DomainError("unknown curve id: " + id);
  if (!curve_applies(id, q))
    throw DomainError("curve " + id + " is not defined for q = " + std::to_string(q));

  const bool odd = q % 2 != 0;
  if (id == "upper-main") return [q](double d) { return upper_main(q, d); };
  if (id == "upper-schur") return [q](double d) { return upper_schur(q, d); };
  if (id == "upper-prop2-lp1")
    return [q](double d) {
      return compose_binary(q, [](double x) { return rate_lp1(2.0, x); }, d);
    };
  if (id == "upper-prop2-lp2")
    return [q](double d) { return compose_binary(q, rate_lp2_binary, d); };
  if (id == "lower-prop2-gv") {
    const int m = odd ? q - 1 : q;
    return [m](double d) {
      return compose_binary(m, [](double x) { return rate_gv(2.0, x); }, d);
    };
  }
  if (id == "lower-gv-pentagon") return lower_pentagon;
  if (id == "lower-2r1-gv") {
    const int r = two_power_exponent(q);
    return [r](double d) { return lower_2r1(r, d); };
  }
  return lower_9cycle;
}

}  // namespace cyclecodes::bounds
