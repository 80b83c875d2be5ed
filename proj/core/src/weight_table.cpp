#include "cyclecodes/weight_table.hpp"

#include "cyclecodes/errors.hpp"

namespace cyclecodes {

WeightTable WeightTable::hamming(int q) {
  if (q < 2) throw DomainError("alphabet size must be at least 2");
  WeightTable t;
  t.q = q;
  t.w.assign(static_cast<std::size_t>(q), 1.0);
  t.w[0] = 0.0;
  return t;
}

WeightTable WeightTable::nine_cycle() {
  WeightTable t;
  t.q = 9;
  t.w = {0.0, 1.0, 1.0, 2.0, 1.0, 1.0, 2.0, 1.0, 1.0};
  return t;
}

WeightTable WeightTable::cycle(int q) {
  if (q < 2) throw DomainError("alphabet size must be at least 2");
  WeightTable t;
  t.q = q;
  t.w.assign(static_cast<std::size_t>(q), std::nullopt);
  t.w[0] = 0.0;
  t.w[1] = 1.0;
  t.w[static_cast<std::size_t>(q - 1)] = 1.0;
  return t;
}

}  // namespace cyclecodes
