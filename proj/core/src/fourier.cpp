#include "cyclecodes/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "cyclecodes/errors.hpp"

namespace cyclecodes::fourier {

std::size_t table_size(int q, int n, std::size_t budget) {
  if (q < 2 || n < 1) throw DomainError("table needs q >= 2 and n >= 1");
  const double total = std::pow(static_cast<double>(q), n);
  if (total > static_cast<double>(budget))
    throw BudgetExceeded("q^n = " + std::to_string(static_cast<long long>(total)) +
                         " exceeds the table budget");
  return static_cast<std::size_t>(std::llround(total));
}

FourierTable dft(int q, int n, std::span<const double> values, std::size_t budget) {
  const std::size_t size = table_size(q, n, budget);
  if (values.size() != size) throw DomainError("table size does not match q^n");

  const auto uq = static_cast<std::size_t>(q);
  std::vector<std::complex<double>> twiddle(uq);
  for (std::size_t k = 0; k < uq; ++k)
    twiddle[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / q);

  std::vector<std::complex<double>> data(values.begin(), values.end());
  std::vector<std::complex<double>> line(uq), out(uq);
  // Coordinate j has stride q^{n-1-j}.
  std::size_t stride = size / uq;
  for (int axis = 0; axis < n; ++axis, stride /= uq) {
    for (std::size_t base = 0; base < size; ++base) {
      if ((base / stride) % uq != 0) continue;
      for (std::size_t x = 0; x < uq; ++x) line[x] = data[base + x * stride];
      for (std::size_t w = 0; w < uq; ++w) {
        std::complex<double> acc = 0.0;
        for (std::size_t x = 0; x < uq; ++x) acc += line[x] * twiddle[(w * x) % uq];
        out[w] = acc;
      }
      for (std::size_t w = 0; w < uq; ++w) data[base + w * stride] = out[w];
    }
  }

  FourierTable t;
  t.q = q;
  t.n = n;
  t.values.assign(values.begin(), values.end());
  t.transform.resize(size);
  double max_re = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    t.transform[i] = data[i].real();
    t.max_imag = std::max(t.max_imag, std::abs(data[i].imag()));
    max_re = std::max(max_re, std::abs(data[i].real()));
  }
  if (t.max_imag > 1e-9 * std::max(1.0, max_re))
    throw NumericalError("transform has a non-negligible imaginary part; input is not even");
  return t;
}

double plancherel_residual(const FourierTable& t) {
  double lhs = 0.0, rhs = 0.0;
  for (double v : t.transform) lhs += v * v;
  lhs /= std::pow(static_cast<double>(t.q), t.n);
  for (double v : t.values) rhs += v * v;
  return std::abs(lhs - rhs) / std::max(rhs, 1e-300);
}

std::vector<int> index_symbols(int q, int n, std::size_t index) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(q));
    index /= static_cast<std::size_t>(q);
  }
  return s;
}

}  // namespace cyclecodes::fourier
