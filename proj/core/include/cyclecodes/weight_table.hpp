#pragma once

#include <optional>
#include <vector>

namespace cyclecodes {

/// Per-symbol weight on Z_q; std::nullopt encodes +infinity. w[0] is 0.
struct WeightTable {
  int q = 0;
  std::vector<std::optional<double>> w;

  /// Hamming weight: 0 at 0, 1 elsewhere.
  static WeightTable hamming(int q);
  /// Exact factor weight of C_9^3 modulo {a3 = 2 a1 + 4 a2}:
  /// (0,1,1,2,1,1,2,1,1).
  static WeightTable nine_cycle();
  /// Cycle semimetric weight: 0 at 0, 1 at +-1, infinity elsewhere.
  static WeightTable cycle(int q);
};

}  // namespace cyclecodes
