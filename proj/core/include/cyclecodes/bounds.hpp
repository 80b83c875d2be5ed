#pragma once

// Closed-form asymptotic rate bounds for codes on cycle graphs.
// Every rate is in nats.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclecodes/weight_table.hpp"

namespace cyclecodes::bounds {

/// Parameters of the q-cycle. The fractional alphabet size and the Lovasz
/// theta value are only populated for odd q.
struct CycleParams {
  int q = 0;
  bool odd = false;
  std::optional<double> q_prime;  // 1 + 1/cos(pi/q)
  std::optional<double> theta_l;  // q cos(pi/q) / (1 + cos(pi/q))
};

CycleParams cycle_params(int q);

/// q-ary entropy x ln(q-1) - x ln x - (1-x) ln(1-x), with 0 ln 0 = 0.
/// q_real may be fractional.
double entropy_hq(double x, double q_real);

/// Gilbert-Varshamov rate ln q - H_q(delta); zero for delta >= 1 - 1/q.
double rate_gv(double q_real, double delta);

/// First linear-programming (MRRW) rate; zero for delta >= 1 - 1/q.
double rate_lp1(double q_real, double delta);

/// The argument of H_q inside the first LP bound,
/// ((q-1) - (q-2) delta - 2 sqrt((q-1) delta (1-delta))) / q.
double lp1_argument(double q_real, double delta);

/// Binary second MRRW bound:
///   min_{0 < u <= 1-2 delta} ln 2 (1 + g(u^2) - g(u^2 + 2 delta u + 2 delta)),
/// g(x) = H_2((1 - sqrt(1-x))/2) in bits. Zero for delta >= 1/2.
double rate_lp2_binary(double delta);

/// ln theta_L(C_q) + R_LP1(q', delta), odd q.
double upper_main(int q, double delta);

/// ln theta_L(C_q) + R_LP1(q, delta), odd q (Schur product corollary).
double upper_schur(int q, double delta);

using RateFunction = std::function<double(double)>;

/// ln(m/2) + binary_curve(delta): the clique-cover composition with the
/// binary Hamming space.
double compose_binary(int m, const RateFunction& binary_curve, double delta);

/// 1/2 ln 5 + 1/2 R_GV(5, 2 delta).
double lower_pentagon(double delta);

/// ((r-1)/r) ln q + (1/r) R_GV(q, r delta) with q = 2^r + 1.
double lower_2r1(int r, double delta);

/// Solution of the max-entropy problem behind the weighted GV bound.
struct MaxEntropySolution {
  double rate = 0.0;          // ln q - H(P*)
  double multiplier = 0.0;    // lambda >= 0
  double t = 1.0;             // exp(-lambda)
  double entropy = 0.0;       // H(P*)
  std::vector<double> distribution;
};

/// Maximum-entropy distribution on the weight table subject to
/// E_P[w] <= delta_w, found by bisection on the Lagrange multiplier.
MaxEntropySolution weighted_gv_solve(const WeightTable& weights, double delta_w);

/// ln q - H(P*) for the solution above.
double weighted_gv_rate(const WeightTable& weights, double delta_w);

/// (2/3) ln 9 + (1/3) weighted_gv_rate(nine_cycle, 3 delta).
double lower_9cycle(double delta);

/// The closed form for the 9-cycle factor rate: t is the positive root of
/// 2 t^2 (2 - x) + 6 t (1 - x) - x = 0 and P = (1,t,t,t^2,t,t,t^2,t,t)/Z.
struct NineCycleClosedForm {
  double rate = 0.0;
  double t = 1.0;
};
NineCycleClosedForm nine_cycle_closed_form(double delta_w);

// ---------------------------------------------------------------------------
// Curves

enum class BoundKind { upper, lower };

struct RatePoint {
  double delta = 0.0;
  double rate = 0.0;
};

struct BoundCurve {
  std::string label;
  BoundKind kind = BoundKind::upper;
  int q = 0;
  std::vector<RatePoint> points;
};

/// n evenly spaced deltas in [lo, hi] (n >= 2, or n == 1 giving {lo}).
std::vector<double> make_grid(double lo = 0.0, double hi = 1.0, int steps = 201);

BoundCurve sample_curve(std::string label, BoundKind kind, int q,
                        const RateFunction& rate, std::span<const double> grid);

/// Pointwise min (upper) or max (lower) over curves sharing q and grid.
BoundCurve envelope(std::span<const BoundCurve> curves, BoundKind kind);

/// Curve identifiers understood by curve_by_id.
const std::vector<std::string>& curve_ids();

/// Whether the named curve is defined for cycle order q.
bool curve_applies(const std::string& id, int q);

/// Resolve a curve id for q into a rate function; throws DomainError if the
/// curve is not defined for q.
RateFunction curve_by_id(const std::string& id, int q);

BoundKind curve_kind(const std::string& id);

}  // namespace cyclecodes::bounds
