#include "cyclecodes_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cyclecodes/bounds.hpp"
#include "cyclecodes/certificates.hpp"
#include "cyclecodes/code_io.hpp"
#include "cyclecodes/codes.hpp"
#include "cyclecodes/constructions.hpp"
#include "cyclecodes/errors.hpp"
#include "cyclecodes/independent_set.hpp"
#include "cyclecodes/lp_bound.hpp"

namespace cyclecodes::cli {

namespace {

struct GridFlags {
  double delta_min = 0.0;
  double delta_max = 1.0;
  int steps = 201;
  std::string units = "nats";
};

struct Options {
  GridFlags grid;
  int q = 0;
  int n = 0;
  int k = 0;
  int r = 0;
  std::string d;
  std::string curve;
  std::string out;
  std::string figure;
  std::string input;
  std::size_t budget = 1000;
  double tol = 1e-9;
};

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
  cmd->add_option("--delta-min", g.delta_min, "Grid start")->capture_default_str();
  cmd->add_option("--delta-max", g.delta_max, "Grid end")->capture_default_str();
  cmd->add_option("--steps", g.steps, "Grid points")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--units", g.units, "Rate units")
      ->check(CLI::IsMember({"nats", "bits"}))
      ->capture_default_str();
}

double unit_scale(const std::string& units) { return units == "bits" ? 1.0 / std::log(2.0) : 1.0; }

void write_csv(std::ostream& os, const bounds::BoundCurve& curve, double scale) {
  os << "delta,rate,curve\n";
  for (const auto& p : curve.points) os << format_csv_row(p.delta, p.rate * scale, curve.label);
}

void write_csv_file(const std::filesystem::path& path, const bounds::BoundCurve& curve, double scale) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  write_csv(f, curve, scale);
}

codes::ExtDist parse_distance(const std::string& s) {
  try {
    return codes::parse_ext_dist(s);
  } catch (const std::exception&) {
    throw DomainError("--d expects a nonnegative integer or inf, got '" + s + "'");
  }
}

bounds::BoundCurve curve_for(const std::string& id, int q, const std::vector<double>& grid) {
  return bounds::sample_curve(id, bounds::curve_kind(id), q, bounds::curve_by_id(id, q), grid);
}

int cmd_bound(const Options& o, std::ostream& out) {
  const auto grid = bounds::make_grid(o.grid.delta_min, o.grid.delta_max, o.grid.steps);
  const auto curve = curve_for(o.curve, o.q, grid);
  const double scale = unit_scale(o.grid.units);
  if (o.out.empty()) {
    write_csv(out, curve, scale);
  } else {
    write_csv_file(o.out, curve, scale);
  }
  return kExitOk;
}

int cmd_figure(const Options& o, std::ostream& out) {
  const int q = o.figure == "pentagon" ? 5 : 9;
  const auto grid = bounds::make_grid(o.grid.delta_min, o.grid.delta_max, o.grid.steps);
  const double scale = unit_scale(o.grid.units);
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::filesystem::create_directories(dir);

  std::vector<bounds::BoundCurve> uppers, lowers;
  for (const auto& id : bounds::curve_ids()) {
    if (!bounds::curve_applies(id, q)) continue;
    auto curve = curve_for(id, q, grid);
    write_csv_file(dir / (id + ".csv"), curve, scale);
    out << (dir / (id + ".csv")).string() << '\n';
    (curve.kind == bounds::BoundKind::upper ? uppers : lowers).push_back(std::move(curve));
  }
  for (auto* family : {&uppers, &lowers}) {
    const auto kind = family == &uppers ? bounds::BoundKind::upper : bounds::BoundKind::lower;
    const auto env = bounds::envelope(*family, kind);
    write_csv_file(dir / (env.label + ".csv"), env, scale);
    out << (dir / (env.label + ".csv")).string() << '\n';
  }
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  codes::SearchOptions opts;
  opts.vertex_budget = o.budget;
  const auto res = codes::alpha_search(o.q, o.n, parse_distance(o.d), opts);
  out << "M = " << res.size << '\n';
  out << "nodes = " << res.nodes << '\n';
  if (!o.out.empty()) codes::write_code_file(o.out, res.witness);
  return kExitOk;
}

bool is_power_of_two_plus_one(int q, int& r) {
  for (r = 1; r < 30; ++r)
    if ((1 << r) + 1 == q) return true;
  return false;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const auto d = parse_distance(o.d);
  if (d.is_infinite()) throw DomainError("construct needs a finite --d");
  const int dist = static_cast<int>(d.value());
  if (o.k < 1) throw DomainError("construct needs --k >= 1");

  int r = 0;
  std::optional<codes::Code> code;
  if (o.q % 2 == 0) {
    codes::SearchOptions opts;
    opts.vertex_budget = o.budget;
    const auto binary = codes::alpha_search(2, o.k, d, opts);
    code = codes::construct_even(o.q, binary.witness);
  } else if (o.q == 5) {
    code = codes::construct_pentagon(o.k, dist);
  } else if (is_power_of_two_plus_one(o.q, r)) {
    if (o.r != 0 && o.r != r) throw DomainError("--r does not match q = 2^r + 1");
    code = codes::construct_2r1(r, o.k, dist);
  } else {
    throw DomainError("no construction for q = " + std::to_string(o.q) +
                      " (even q, 5, or 2^r + 1 with r >= 3)");
  }
  if (o.out.empty()) {
    codes::write_code(out, *code);
  } else {
    codes::write_code_file(o.out, *code);
    out << "size = " << code->size() << '\n';
    out << "n = " << code->n() << '\n';
    out << "dmin = " << codes::dmin(*code).to_string() << '\n';
  }
  return kExitOk;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void print_lp_check(std::ostream& out, const lpbound::CheckReport& rep) {
  certs::VerificationReport vr;
  vr.add("lp-certificate", rep.feasible, rep.max_violation);
  vr.print(out);
  if (!rep.feasible) out << "reason = " << rep.reason << '\n';
}

// Runs the Fourier checks when the certificate's alphabet is q'(q) for odd q.
bool maybe_check_fourier(const Options& o, const lpbound::LPCertificate& cert, std::ostream& out) {
  if (o.q == 0) return true;
  certs::VerificationReport vr;
  bool ok = true;
  try {
    certs::build_f(o.q, cert.scheme.n, cert, &vr);
  } catch (const certs::CertificateRejected&) {
    ok = false;
  }
  vr.print(out);
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::ifstream f(o.input, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + o.input);
  std::string first;
  while (std::getline(f, first) && first.find_first_not_of(" \t") == std::string::npos) {
  }
  std::istringstream tokens(first);
  std::string tok;
  int count = 0;
  while (tokens >> tok) ++count;
  f.clear();
  f.seekg(0);

  if (count == 3) {
    const auto cert = lpbound::read_certificate(f);
    const auto rep = lpbound::certificate_check(cert, {o.tol});
    print_lp_check(out, rep);
    if (rep.feasible) out << "certified = " << format_real(rep.certified_value) << '\n';
    const bool fourier_ok = maybe_check_fourier(o, cert, out);
    return rep.feasible && fourier_ok ? kExitOk : kExitFailure;
  }

  const auto code = codes::read_code(f);
  const auto dm = codes::dmin(code);
  out << "size = " << code.size() << '\n';
  out << "dmin = " << dm.to_string() << '\n';
  if (!o.d.empty()) {
    const bool ok = dm >= parse_distance(o.d);
    certs::VerificationReport vr;
    vr.add("dmin-at-least-" + o.d, ok, 0.0);
    vr.print(out);
    return ok ? kExitOk : kExitFailure;
  }
  return kExitOk;
}

int cmd_lp(const Options& o, std::ostream& out) {
  const auto p = bounds::cycle_params(o.q);
  if (!p.odd) throw DomainError("lp needs odd q");
  if (o.n < 1) throw DomainError("lp needs --n >= 1");
  const auto dist = parse_distance(o.d);
  const int d = dist.is_infinite() ? o.n + 1 : static_cast<int>(dist.value());
  const kraw::SchemeParams scheme{o.n, *p.q_prime};
  const auto sol = lpbound::lp_solve(scheme, d);
  const auto rep = lpbound::certificate_check(sol.cert, {o.tol});
  print_lp_check(out, rep);
  if (!rep.feasible) return kExitFailure;
  const auto bound = lpbound::make_bound(rep.certified_value, o.n, *p.theta_l);
  const double scale = unit_scale(o.grid.units);
  out << "value = " << format_real(sol.value) << '\n';
  out << "certified = " << format_real(rep.certified_value) << '\n';
  out << "size-bound = " << format_real(std::exp(bound.log_bound)) << '\n';
  out << "rate = " << format_real(bound.rate * scale) << '\n';
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    lpbound::write_certificate(f, sol.cert);
  }
  return kExitOk;
}

int cmd_cert(const Options& o, std::ostream& out) {
  if (o.n < 1) throw DomainError("cert needs --n >= 1");
  const auto p = bounds::cycle_params(o.q);
  if (!p.odd) throw DomainError("cert needs odd q");
  const int d = o.d.empty() ? o.n : [&] {
    const auto dist = parse_distance(o.d);
    return dist.is_infinite() ? o.n + 1 : static_cast<int>(dist.value());
  }();

  certs::VerificationReport vr;
  vr.append(certs::verify_circulant(certs::lovasz_circulant(o.q)));
  bool ok = true;
  try {
    const auto sol = lpbound::lp_solve({o.n, *p.q_prime}, d);
    const auto f = certs::build_f(o.q, o.n, sol.cert, &vr);
    if (f.size() <= std::min(o.budget, certs::kMatrixBudget)) {
      const auto cert = certs::cert_from_function(
          f, d > o.n ? codes::ExtDist::infinite() : codes::ExtDist(d), certs::Metric::cycle, &vr);
      out << "bound = " << format_real(cert.max_diagonal()) << '\n';
    } else {
      out << "bound = " << format_real(certs::function_bound(f)) << '\n';
    }
  } catch (const certs::CertificateRejected&) {
    ok = false;
  }
  vr.print(out);
  return ok && vr.all_pass() ? kExitOk : kExitFailure;
}

}  // namespace

std::string format_csv_row(double delta, double rate, const std::string& curve) {
  char buf[96];
  // Avoid "-0" in the output.
  std::snprintf(buf, sizeof buf, "%.12g,%.12g,", delta == 0.0 ? 0.0 : delta, rate == 0.0 ? 0.0 : rate);
  return std::string(buf) + curve + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds, searches and certificates for codes on cycle graphs"};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "Emit one bound curve as CSV");
  bound->add_option("--q", o.q, "Cycle order")->required();
  bound->add_option("--curve", o.curve, "Curve id")->required()->check(CLI::IsMember(bounds::curve_ids()));
  bound->add_option("--out", o.out, "Output file (default stdout)");
  add_grid_flags(bound, o.grid);

  auto* figure = app.add_subcommand("figure", "Emit a figure's curve family as CSV files");
  figure->add_option("name", o.figure, "pentagon or ninegon")
      ->required()
      ->check(CLI::IsMember({"pentagon", "ninegon"}));
  figure->add_option("--out", o.out, "Output directory (default .)");
  add_grid_flags(figure, o.grid);

  auto* search = app.add_subcommand("search", "Exact maximum code size M_q(n, d)");
  search->add_option("--q", o.q)->required();
  search->add_option("--n", o.n)->required();
  search->add_option("--d", o.d, "Minimum distance or inf")->required();
  search->add_option("--budget", o.budget, "Largest vertex count q^n")->capture_default_str();
  search->add_option("--out", o.out, "Witness code file");

  auto* construct = app.add_subcommand("construct", "Write a code from an explicit construction");
  construct->add_option("--q", o.q)->required();
  construct->add_option("--k", o.k, "Factor length")->required();
  construct->add_option("--d", o.d, "Factor minimum distance")->required();
  construct->add_option("--r", o.r, "Exponent for q = 2^r + 1");
  construct->add_option("--budget", o.budget, "Vertex budget of the binary search (even q)")
      ->capture_default_str();
  construct->add_option("--out", o.out, "Output code file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Re-check a code file or an LP certificate file");
  verify->add_option("file", o.input, "Code or certificate file")->required();
  verify->add_option("--d", o.d, "Required minimum distance of a code");
  verify->add_option("--q", o.q, "Odd q: also run the Fourier checks on a certificate");
  verify->add_option("--tol", o.tol, "Relative tolerance of the LP check")->capture_default_str();

  auto* lp = app.add_subcommand("lp", "Finite-length LP bound");
  lp->add_option("--q", o.q)->required();
  lp->add_option("--n", o.n)->required();
  lp->add_option("--d", o.d, "Minimum distance or inf")->required();
  lp->add_option("--out", o.out, "Write the certificate here");
  lp->add_option("--tol", o.tol, "Relative tolerance of the LP check")->capture_default_str();
  lp->add_option("--units", o.grid.units)->check(CLI::IsMember({"nats", "bits"}))->capture_default_str();

  auto* cert = app.add_subcommand("cert", "Theta-certificate verification battery");
  cert->add_option("--q", o.q)->required();
  cert->add_option("--n", o.n)->required();
  cert->add_option("--d", o.d, "LP target distance (default n)");
  cert->add_option("--budget", o.budget, "Largest matrix size q^n for the PSD check")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(o, out);
    if (figure->parsed()) return cmd_figure(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (lp->parsed()) return cmd_lp(o, out);
    if (cert->parsed()) return cmd_cert(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what();
    if (e.best_known() > 0) err << " (best found " << e.best_known() << ")";
    err << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace cyclecodes::cli
