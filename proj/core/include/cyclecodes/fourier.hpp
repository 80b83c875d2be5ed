#pragma once

// Fourier transform on Z_q^n,
//   fhat(w) = sum_x f(x) exp(2 pi i <w, x> / q),
// for real functions whose transform is real (even functions). Tables are
// indexed like codes::word_index: first coordinate most significant.

#include <cstddef>
#include <span>
#include <vector>

namespace cyclecodes::fourier {

struct FourierTable {
  int q = 0;
  int n = 0;
  std::vector<double> values;
  std::vector<double> transform;
  double max_imag = 0.0;  // largest |Im fhat| seen before discarding it

  std::size_t size() const { return values.size(); }
};

inline constexpr std::size_t kDefaultTableBudget = 1'000'000;

/// Throws BudgetExceeded if q^n > budget.
std::size_t table_size(int q, int n, std::size_t budget = kDefaultTableBudget);

/// Per-coordinate transform, n q^{n+1} operations. Throws NumericalError if
/// the imaginary residue exceeds 1e-9 max(1, max |fhat|).
FourierTable dft(int q, int n, std::span<const double> values,
                 std::size_t budget = kDefaultTableBudget);

/// |q^{-n} sum_w fhat(w)^2 - sum_x f(x)^2| / max(sum_x f(x)^2, tiny).
double plancherel_residual(const FourierTable& t);

/// Symbols of the word with the given table index.
std::vector<int> index_symbols(int q, int n, std::size_t index);

}  // namespace cyclecodes::fourier
