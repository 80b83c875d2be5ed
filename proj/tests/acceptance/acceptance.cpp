// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
// Usage: acceptance <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclecodes/bounds.hpp"
#include "cyclecodes/certificates.hpp"
#include "cyclecodes/codes.hpp"
#include "cyclecodes/constructions.hpp"
#include "cyclecodes/fourier.hpp"
#include "cyclecodes/independent_set.hpp"
#include "cyclecodes/krawtchouk.hpp"
#include "cyclecodes/lp_bound.hpp"
#include "cyclecodes/psd.hpp"
#include "cyclecodes/weight_table.hpp"
#include "cyclecodes_cli/cli.hpp"

namespace fs = std::filesystem;
using namespace cyclecodes;

namespace {

// ln(5)/2, printed as 0.8047190 to seven places.
const double kPentagonFlat = std::log(5.0) / 2.0;
const double kPentagonFlatPrinted = 0.8047190;
const double kPlotkin5 = 1.0 - 1.0 / std::sqrt(5.0);

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

int failures = 0;

void run_criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) o.require(secs < limit_s, "took " + fmt(secs) + " s, limit " + fmt(limit_s) + " s");
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << fmt(secs) << " s)";
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
}

std::vector<bounds::BoundCurve> curves_for(int q, std::span<const double> grid) {
  std::vector<bounds::BoundCurve> out;
  for (const auto& id : bounds::curve_ids())
    if (bounds::curve_applies(id, q))
      out.push_back(bounds::sample_curve(id, bounds::curve_kind(id), q, bounds::curve_by_id(id, q), grid));
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<double, double>> read_csv(const fs::path& p) {
  std::istringstream in(slurp(p));
  std::string line;
  std::getline(in, line);
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    rows.emplace_back(std::stod(line.substr(0, c1)), std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
  }
  return rows;
}

std::vector<codes::ExtDist> distances(int n) {
  std::vector<codes::ExtDist> ds;
  for (int d = 1; d <= n; ++d) ds.emplace_back(d);
  ds.push_back(codes::ExtDist::infinite());
  return ds;
}

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto p = bounds::cycle_params(5);
  const double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
  o.require(p.q_prime && std::abs(*p.q_prime - 2.2360680) <= 1e-6, "q' = " + fmt(p.q_prime.value_or(NAN)));
  o.require(p.theta_l && std::abs(*p.theta_l - 2.2360680) <= 1e-6, "theta_L = " + fmt(p.theta_l.value_or(NAN)));
  o.require(us < 1000.0, "cycle_params took " + fmt(us) + " us");
}

void criterion2(Outcome& o) {
  const auto grid = bounds::make_grid();
  const auto curve = bounds::sample_curve("upper-main", bounds::BoundKind::upper, 5,
                                          [](double d) { return bounds::upper_main(5, d); }, grid);
  int checked = 0;
  for (const auto& pt : curve.points) {
    if (pt.delta < kPlotkin5) continue;
    ++checked;
    o.require(std::abs(pt.rate - kPentagonFlat) <= 1e-9, "delta " + fmt(pt.delta) + " rate " + fmt(pt.rate));
    o.require(std::abs(pt.rate - kPentagonFlatPrinted) <= 5e-8, "delta " + fmt(pt.delta) + " not 0.8047190");
  }
  o.require(checked == 90, "expected 90 grid points beyond the Plotkin point, saw " + std::to_string(checked));
}

void criterion3(Outcome& o) {
  o.require(std::abs(bounds::lower_pentagon(0.0) - std::log(5.0)) <= 1e-12, "lower_pentagon(0)");
  const double at39 = bounds::lower_pentagon(0.39);
  o.require(at39 > kPentagonFlat, "lower_pentagon(0.39) = " + fmt(at39));
  for (double d : bounds::make_grid(0.4, 1.0, 121)) {
    const double v = bounds::lower_pentagon(d);
    o.require(std::abs(v - kPentagonFlat) <= 1e-12, "lower_pentagon(" + fmt(d) + ") = " + fmt(v));
  }
}

void criterion4(Outcome& o) {
  const auto grid = bounds::make_grid();
  for (int q : {5, 9}) {
    const auto curves = curves_for(q, grid);
    double worst = INFINITY;
    for (const auto& lo : curves) {
      if (lo.kind != bounds::BoundKind::lower) continue;
      for (const auto& up : curves) {
        if (up.kind != bounds::BoundKind::upper) continue;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double slack = up.points[i].rate - lo.points[i].rate;
          worst = std::min(worst, slack);
          if (slack < -1e-9)
            o.require(false, "q=" + std::to_string(q) + " " + lo.label + " > " + up.label + " at " + fmt(grid[i]));
        }
      }
    }
    o.require(std::isfinite(worst), "q=" + std::to_string(q) + " has no lower/upper pair");
  }
}

void criterion5(Outcome& o) {
  const auto a = codes::alpha_search(5, 2, codes::ExtDist::infinite()).size;
  o.require(a == 5, "alpha_search(5,2,inf) = " + std::to_string(a));
  const auto b = codes::alpha_search(5, 1, codes::ExtDist(2)).size;
  o.require(b == 2, "alpha_search(5,1,2) = " + std::to_string(b));
  for (int n = 1; n <= 3; ++n)
    for (auto d : distances(n)) {
      const auto m4 = codes::alpha_search(4, n, d).size;
      const auto m2 = codes::alpha_search(2, n, d).size;
      o.require(m4 == (std::size_t{1} << n) * m2,
                "n=" + std::to_string(n) + " d=" + d.to_string() + ": " + std::to_string(m4) + " vs 2^n*" +
                    std::to_string(m2));
    }
}

void criterion6(Outcome& o) {
  for (int n = 1; n <= 3; ++n)
    for (auto d : distances(n)) {
      // Finite cycle distances never exceed n, so d = inf is the LP at n + 1.
      const int lp_d = d.is_infinite() ? n + 1 : static_cast<int>(d.value());
      const double bound = std::exp(n * lpbound::finite_n_rate(5, n, lp_d));
      const auto m = codes::alpha_search(5, n, d).size;
      o.require(bound >= static_cast<double>(m) * (1 - 1e-12),
                "n=" + std::to_string(n) + " d=" + d.to_string() + ": " + fmt(bound) + " < " + std::to_string(m));
    }
}

void criterion7(Outcome& o) {
  const std::vector<std::pair<int, int>> cases{{5, 2}, {5, 3}, {7, 2}, {9, 2}};
  for (auto [q, n] : cases) {
    const auto params = bounds::cycle_params(q);
    std::set<int> ds{n, 2};
    for (int d : ds) {
      const std::string tag = "(" + std::to_string(q) + "," + std::to_string(n) + ",d=" + std::to_string(d) + ")";
      const auto sol = lpbound::lp_solve({n, *params.q_prime}, d);
      const auto f = certs::build_f(q, n, sol.cert);
      const auto g = certs::build_g(q, n);

      const double top = *std::max_element(f.transform.begin(), f.transform.end());
      const double low = *std::min_element(f.transform.begin(), f.transform.end());
      o.require(low >= -1e-8 * top, tag + " min fhat " + fmt(low));

      double far = -INFINITY;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const auto w = codes::word_at(q, n, i);
        if (codes::weight(w) >= codes::ExtDist(d)) far = std::max(far, f.values[i]);
      }
      o.require(far <= 1e-10, tag + " f on far words " + fmt(far));

      const double qn = std::pow(q, n);
      const double hhat0 = qn * sol.cert.coeffs[0];
      const double expect0 = g.transform[0] * hhat0 / qn;
      o.require(std::abs(f.transform[0] - expect0) <= 1e-9 * std::abs(expect0), tag + " fhat(0)");

      const double bound = certs::function_bound(f);
      const double factored = std::pow(*params.theta_l, n) * lpbound::certificate_value(sol.cert);
      o.require(std::abs(bound - factored) <= 1e-8 * factored,
                tag + " bound " + fmt(bound) + " vs " + fmt(factored));
    }
  }
}

void criterion8(Outcome& o) {
  const std::vector<double> alphabets{3.0, std::sqrt(5.0), *bounds::cycle_params(9).q_prime};
  for (double qp : alphabets) {
    for (int n = 1; n <= 40; ++n) {
      const kraw::SchemeParams s{n, qp};
      std::vector<std::vector<double>> cols;
      for (int u = 0; u <= n; ++u) cols.push_back(kraw::kraw_column(s, u));

      double agree = 0.0;
      for (int u = 0; u <= n; ++u)
        for (int l = 0; l <= n; ++l) {
          const double diff = std::abs(cols[static_cast<std::size_t>(u)][static_cast<std::size_t>(l)] -
                                       kraw::kraw_eval_explicit(s, l, u));
          agree = std::max(agree, diff / kraw::kraw_scale(s, l, u));
        }
      o.require(agree <= 1e-9, "recurrence vs explicit q'=" + fmt(qp) + " n=" + std::to_string(n) + ": " + fmt(agree));

      if (n <= 20) {
        double orth = 0.0;
        for (int l = 0; l <= n; ++l)
          for (int m = 0; m <= n; ++m) {
            double acc = 0.0;
            for (int u = 0; u <= n; ++u)
              acc += kraw::scheme_weight(s, u) * cols[static_cast<std::size_t>(u)][static_cast<std::size_t>(l)] *
                     cols[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)];
            const double norm = std::sqrt(kraw::kraw_norm(s, l) * kraw::kraw_norm(s, m));
            orth = std::max(orth, std::abs(acc / norm - (l == m ? 1.0 : 0.0)));
          }
        o.require(orth <= 1e-8, "orthogonality q'=" + fmt(qp) + " n=" + std::to_string(n) + ": " + fmt(orth));
      }

      double mean = 0.0;
      for (int l = 1; l <= n; ++l) {
        std::vector<double> e(static_cast<std::size_t>(n) + 1, 0.0);
        e[static_cast<std::size_t>(l)] = 1.0;
        const double norm = std::sqrt(kraw::kraw_norm(s, l) / std::pow(qp, n));
        mean = std::max(mean, std::abs(kraw::binomial_diagnostic(s, e)) / norm);
      }
      o.require(mean <= 1e-9, "binomial mean q'=" + fmt(qp) + " n=" + std::to_string(n) + ": " + fmt(mean));
    }
  }
}

void criterion9(Outcome& o) {
  for (double qp : {std::sqrt(5.0), *bounds::cycle_params(9).q_prime}) {
    const double v = lpbound::lp_solve({1, qp}, 1).value;
    o.require(std::abs(v - qp) <= 1e-9, "n=1 value " + fmt(v) + " vs " + fmt(qp));
  }
  double prev = INFINITY;
  for (int d = 1; d <= 21; ++d) {
    const double v = lpbound::lp_solve({20, std::sqrt(5.0)}, d).value;
    o.require(v <= prev * (1 + 1e-12), "n=20 value rises at d=" + std::to_string(d));
    prev = v;
  }
}

void criterion10(Outcome& o) {
  const auto sol = bounds::weighted_gv_solve(WeightTable::nine_cycle(), 10.0 / 9.0);
  o.require(std::abs(sol.rate) <= 1e-9, "rate at 10/9 = " + fmt(sol.rate));
  o.require(std::abs(sol.t - 1.0) <= 1e-9, "t at 10/9 = " + fmt(sol.t));
  o.require(std::abs(bounds::lower_9cycle(0.0) - std::log(9.0)) <= 1e-12, "lower_9cycle(0)");
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = (10.0 / 9.0) * i / 49.0;
    const double a = bounds::nine_cycle_closed_form(x).rate;
    const double b = bounds::weighted_gv_rate(WeightTable::nine_cycle(), x);
    worst = std::max(worst, std::abs(a - b));
  }
  o.require(worst <= 1e-9, "closed form vs solver " + fmt(worst));
}

void criterion11(Outcome& o) {
  const auto c = codes::group_code_2r1(3, 1);
  o.require(c.size() == 81, "size " + std::to_string(c.size()));
  o.require(codes::dmin(c).is_infinite(), "not independent: dmin " + codes::dmin(c).to_string());
  o.require(codes::is_maximal_independent(c), "not maximal");

  // Every vertex of C_9^3 is in the code or adjacent to it.
  std::set<std::vector<int>> members;
  for (const auto& w : c.words()) members.insert(w.symbols);
  std::size_t dominated = 0;
  for (const auto& v : codes::all_words(9, 3)) {
    bool hit = members.count(v.symbols) != 0;
    for (const auto& w : c.words()) {
      if (hit) break;
      hit = !codes::dist(v, w).is_infinite();
    }
    if (hit) ++dominated;
  }
  o.require(dominated == 729, "dominated " + std::to_string(dominated) + " of 729");
}

void criterion12(Outcome& o) {
  for (int q = 3; q <= 99; q += 2) {
    const auto rep = certs::verify_circulant(certs::lovasz_circulant(q));
    o.require(rep.all_pass(), "circulant q=" + std::to_string(q));
  }
  const auto sol = lpbound::lp_solve({2, *bounds::cycle_params(5).q_prime}, 2);
  const auto f = certs::build_f(5, 2, sol.cert);
  const auto m = certs::cert_from_function(f, codes::ExtDist(2));
  std::vector<double> shifted(m.d);
  for (double& v : shifted) v -= 1.0;
  o.require(certs::psd_check(shifted, m.m, 1e-8 * 25), "D - J not PSD, min eig " +
                                                          fmt(certs::min_eigenvalue(shifted, m.m)));
}

void criterion13(Outcome& o, const fs::path& scratch) {
  for (const std::string name : {"pentagon", "ninegon"}) {
    const int q = name == "pentagon" ? 5 : 9;
    const fs::path a = scratch / (name + "-a"), b = scratch / (name + "-b");
    for (const auto& dir : {a, b}) {
      fs::remove_all(dir);
      std::ostringstream out, err;
      const int rc = cli::run({"figure", name, "--out", dir.string()}, out, err);
      o.require(rc == 0, name + " exit " + std::to_string(rc) + " " + err.str());
    }

    std::set<std::string> expected{"upper-envelope.csv", "lower-envelope.csv"};
    for (const auto& id : bounds::curve_ids())
      if (bounds::curve_applies(id, q)) expected.insert(id + ".csv");
    std::set<std::string> got;
    if (fs::exists(a))
      for (const auto& e : fs::directory_iterator(a)) got.insert(e.path().filename().string());
    o.require(got == expected, name + " file set mismatch");

    for (const auto& f : expected) {
      const auto rows = fs::exists(a / f) ? read_csv(a / f) : decltype(read_csv(a / f)){};
      o.require(rows.size() == 201, name + "/" + f + " has " + std::to_string(rows.size()) + " rows");
      o.require(slurp(a / f) == slurp(b / f), name + "/" + f + " differs between runs");
    }

    if (q == 5 && fs::exists(a / "upper-envelope.csv")) {
      const auto rows = read_csv(a / "upper-envelope.csv");
      std::size_t first_flat = rows.size();
      for (std::size_t i = rows.size(); i-- > 0;) {
        if (std::abs(rows[i].second - kPentagonFlat) > 1e-9) break;
        first_flat = i;
      }
      o.require(first_flat < rows.size(), "upper envelope never flat");
      if (first_flat < rows.size()) {
        const double step = rows[1].first - rows[0].first;
        o.require(std::abs(rows[first_flat].first - kPlotkin5) <= step + 1e-12,
                  "flat from " + fmt(rows[first_flat].first));
        o.require(std::abs(rows.back().second - kPentagonFlatPrinted) <= 5e-8, "flat value");
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path scratch = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "cyclecodes_acceptance";
  fs::create_directories(scratch);

  run_criterion(1, "cycle parameters of the pentagon", 0, criterion1);
  run_criterion(2, "pentagon upper bound flat beyond 1-1/sqrt5", 1.0, criterion2);
  run_criterion(3, "pentagon lower bound", 0, criterion3);
  run_criterion(4, "lower curves below upper curves for q in {5,9}", 10.0, criterion4);
  run_criterion(5, "exact search oracle", 60.0, criterion5);
  run_criterion(6, "LP rate bounds exact code sizes", 120.0, criterion6);
  run_criterion(7, "Fourier verification of the cycle LP certificate", 120.0, criterion7);
  run_criterion(8, "Krawtchouk properties", 30.0, criterion8);
  run_criterion(9, "LP baseline", 0, criterion9);
  run_criterion(10, "9-cycle achievability", 0, criterion10);
  run_criterion(11, "maximal independent group code for q=9", 30.0, criterion11);
  run_criterion(12, "certificate battery", 60.0, criterion12);
  run_criterion(13, "figure reproduction", 30.0, [&](Outcome& o) { criterion13(o, scratch); });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
