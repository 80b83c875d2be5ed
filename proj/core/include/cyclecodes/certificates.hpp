#pragma once

// Theta-function feasibility certificates: D with D - J PSD and sign
// constraints on selected entries. The largest diagonal entry bounds the
// size of any code whose pairs fall on constrained entries.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclecodes/codes.hpp"
#include "cyclecodes/fourier.hpp"
#include "cyclecodes/lp_bound.hpp"

namespace cyclecodes::certs {

using fourier::FourierTable;

/// A check inside build_g, build_f or cert_from_function failed. clause()
/// names it.
class CertificateRejected : public std::runtime_error {
 public:
  CertificateRejected(const std::string& clause, double violation);
  const std::string& clause() const noexcept { return clause_; }
  double violation() const noexcept { return violation_; }

 private:
  std::string clause_;
  double violation_;
};

struct CheckLine {
  std::string name;
  bool pass = false;
  double violation = 0.0;  // 0 when the check holds with room to spare
};

struct VerificationReport {
  std::vector<CheckLine> lines;

  void add(std::string name, bool pass, double violation);
  bool all_pass() const;
  void append(const VerificationReport& other);
  /// "CHECK <name> PASS|FAIL <violation>" per line.
  void print(std::ostream& os) const;
};

enum class EntryConstraint : std::uint8_t { free, nonnegative, nonpositive, zero };

/// Constraint met by the product of two entries obeying a and b.
EntryConstraint multiply_constraints(EntryConstraint a, EntryConstraint b);

struct MatrixCert {
  std::size_t m = 0;
  std::vector<double> d;                        // row-major m x m
  std::vector<EntryConstraint> constraints;     // row-major m x m

  double at(std::size_t i, std::size_t j) const { return d[i * m + j]; }
  double max_diagonal() const;
};

/// D = J, constrained nonnegative, so it is neutral under schur_combine.
MatrixCert all_ones_cert(std::size_t m);

/// Symmetry (1e-10 relative), constrained entries (1e-10 relative to
/// max |D|), and min eigenvalue of D - J >= -1e-8 m.
VerificationReport verify_matrix_cert(const MatrixCert& cert);

struct CirculantCert {
  int q = 0;
  double d0 = 0.0;
  double d1 = 0.0;

  /// Eigenvalues of D - J: d0 + 2 d1 cos(2 pi k/q) - q [k = 0].
  std::vector<double> spectrum_minus_j() const;
  /// Zero on non-adjacent pairs, nonnegative elsewhere.
  MatrixCert to_matrix() const;
};

CirculantCert lovasz_circulant(int q);

/// d0 against theta_L (1e-12), d1 against its closed form (1e-12), and the
/// spectrum of D - J (>= -1e-10).
VerificationReport verify_circulant(const CirculantCert& cert);

/// Kronecker power, first factor most significant (matches word_index).
MatrixCert tensor_power(const MatrixCert& base, int n);

/// Entrywise product with merged constraints. Throws DomainError on a size
/// mismatch and CertificateRejected if the product fails verification.
MatrixCert schur_combine(const MatrixCert& a, const MatrixCert& b,
                         VerificationReport* report = nullptr);

/// q^n f(0) / fhat(0).
double function_bound(const FourierTable& f);

/// Product of g_1 = 1_0 + phi 1_{+-1}, phi = 1/(2 cos(pi/q)), odd q.
FourierTable build_g(int q, int n, VerificationReport* report = nullptr);

struct SphereCheck {
  double direct = 0.0;     // transform of 1_{S_l^c} at 1^u 0^{n-u}
  double formula = 0.0;    // (2 cos(pi/q))^l K_l(u; q')
  double max_rel_error = 0.0;  // over every point of S_u^1, |a-b| / max(1, |b|)
};

SphereCheck verify_sphere_transform(int q, int n, int ell, int u);

/// f = g h with hhat = sum_l hhat_l 1_{S_l^c}, hhat_l = q^n Hhat_l / (2 cos(pi/q))^l.
/// Checks fhat >= -1e-8 max fhat, f <= 1e-10 Hhat_0 on words at distance
/// >= cert.d, fhat(0) = q^-n ghat(0) hhat_0 (1e-9), the bound factorization
/// (1e-8) and Plancherel (1e-9). Throws CertificateRejected on a failure.
FourierTable build_f(int q, int n, const lpbound::LPCertificate& cert,
                     VerificationReport* report = nullptr);

enum class Metric { cycle, hamming };

/// f(x) = sum_l Hhat_l K_l(wt_H(x); q) on Z_q^n for a certificate of the
/// integer-q Hamming scheme. fhat = q^n Hhat_{wt(w)}.
FourierTable hamming_lp_function(int q, int n, const lpbound::LPCertificate& cert);

/// D(x, y) = q^n f(x-y) / fhat(0). Entries at distance >= d under the metric
/// are constrained nonpositive; the rest are free. Throws
/// CertificateRejected unless fhat >= -1e-8 max fhat, fhat(0) > 0, f obeys
/// the constraints and D - J passes psd_check at 1e-8 q^n.
MatrixCert cert_from_function(const FourierTable& f, codes::ExtDist d,
                              Metric metric = Metric::cycle,
                              VerificationReport* report = nullptr);

inline constexpr std::size_t kMatrixBudget = 4096;

}  // namespace cyclecodes::certs
