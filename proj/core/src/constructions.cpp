#include "cyclecodes/constructions.hpp"

#include <cmath>
#include <unordered_set>

#include "cyclecodes/errors.hpp"

namespace cyclecodes::codes {

namespace {

std::int64_t integer_weight(const std::optional<double>& w) {
  if (!w) return -1;
  const double r = std::round(*w);
  if (r != *w || r < 0) throw DomainError("weight table entries must be nonnegative integers");
  return static_cast<std::int64_t>(r);
}

int checked_2r1(int r) {
  if (r < 2 || r > 12) throw DomainError("2^r + 1 construction needs 2 <= r <= 12");
  return (1 << r) + 1;
}

Word zeros(int q, int n) { return Word(q, std::vector<int>(static_cast<std::size_t>(n), 0)); }

}  // namespace

ExtDist table_weight(const Word& x, const WeightTable& weights) {
  if (weights.q != x.q || weights.w.size() != static_cast<std::size_t>(x.q))
    throw DomainError("weight table does not match the alphabet");
  std::int64_t total = 0;
  for (int s : x.symbols) {
    const auto w = integer_weight(weights.w[static_cast<std::size_t>(s)]);
    if (w < 0) return ExtDist::infinite();
    total += w;
  }
  return ExtDist(total);
}

std::vector<Word> greedy_gv_factor(const WeightTable& weights, int k, std::int64_t d_w) {
  if (k < 1 || d_w < 1) throw DomainError("greedy code needs k >= 1 and d_w >= 1");
  std::vector<Word> kept;
  for (auto& w : all_words(weights.q, k)) {
    bool ok = true;
    for (const auto& c : kept)
      if (table_weight(w - c, weights) < ExtDist(d_w)) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(std::move(w));
  }
  return kept;
}

std::size_t table_ball_size(const WeightTable& weights, int k, std::int64_t radius) {
  std::size_t count = 0;
  for (const auto& w : all_words(weights.q, k))
    if (table_weight(w, weights) <= ExtDist(radius)) ++count;
  return count;
}

Code construct_even(int q, const Code& binary_code) {
  if (q < 2 || q % 2 != 0) throw DomainError("construct_even needs even q");
  if (binary_code.q() != 2) throw DomainError("construct_even needs a binary code");
  const int n = binary_code.n();
  std::vector<Word> out;
  for (const auto& v : all_words(q / 2, n)) {
    for (const auto& c : binary_code.words()) {
      std::vector<int> s(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = 2 * v.symbols[i] + c.symbols[i];
      out.emplace_back(q, std::move(s));
    }
  }
  return Code(q, n, std::move(out));
}

Code pentagon_base_code(int k) {
  if (k < 1) throw DomainError("pentagon base code needs k >= 1");
  std::vector<Word> out;
  for (const auto& a : all_words(5, k)) {
    std::vector<int> s(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
      s[static_cast<std::size_t>(i)] = a.symbols[static_cast<std::size_t>(i)];
      s[static_cast<std::size_t>(k + i)] = 2 * a.symbols[static_cast<std::size_t>(i)];
    }
    out.emplace_back(5, std::move(s));
  }
  return Code(5, 2 * k, std::move(out));
}

ExtDist factor_weight(const Code& group_code, const Word& rep) {
  if (!is_subgroup(group_code)) throw DomainError("factor weight needs a subgroup code");
  ExtDist best = ExtDist::infinite();
  for (const auto& c : group_code.words()) best = std::min(best, weight(rep + c));
  return best;
}

Code coset_lift(const Code& group_code, const std::vector<Word>& factor_reps) {
  if (!is_subgroup(group_code)) throw DomainError("coset lift needs a subgroup code");
  if (factor_reps.empty()) throw DomainError("coset lift needs at least one representative");
  std::unordered_set<std::size_t> group_index;
  group_index.reserve(group_code.size() * 2);
  for (const auto& w : group_code.words()) group_index.insert(word_index(w));
  for (std::size_t i = 0; i < factor_reps.size(); ++i)
    for (std::size_t j = i + 1; j < factor_reps.size(); ++j)
      if (group_index.contains(word_index(factor_reps[i] - factor_reps[j])))
        throw DomainError("two representatives lie in the same coset");

  std::vector<Word> out;
  out.reserve(group_code.size() * factor_reps.size());
  for (const auto& r : factor_reps)
    for (const auto& c : group_code.words()) out.push_back(r + c);
  return Code(group_code.q(), group_code.n(), std::move(out));
}

Code construct_pentagon(int k, int d) {
  if (d < 1 || d > k) throw DomainError("construct_pentagon needs 1 <= d <= k");
  const auto factor = greedy_gv_factor(WeightTable::hamming(5), k, d);
  return coset_lift(pentagon_base_code(k), embed_factor_reps(5, 2, k, factor));
}

Code group_code_2r1(int r, int k) {
  const int q = checked_2r1(r);
  if (k < 1) throw DomainError("group code needs k >= 1");
  const int free_len = (r - 1) * k;
  std::vector<Word> out;
  for (const auto& a : all_words(q, free_len)) {
    std::vector<int> s(a.symbols);
    s.resize(static_cast<std::size_t>(r * k), 0);
    for (int j = 0; j < k; ++j) {
      long long acc = 0;
      long long coef = 2;
      for (int i = 0; i < r - 1; ++i, coef *= 2)
        acc += coef * a.symbols[static_cast<std::size_t>(i * k + j)];
      s[static_cast<std::size_t>(free_len + j)] = static_cast<int>(acc % q);
    }
    out.emplace_back(q, std::move(s));
  }
  return Code(q, r * k, std::move(out));
}

std::vector<Word> embed_factor_reps(int q, int r, int k, const std::vector<Word>& factor_words) {
  std::vector<Word> reps;
  reps.reserve(factor_words.size());
  for (const auto& x : factor_words) {
    if (x.q != q || x.length() != k) throw DomainError("factor word shape mismatch");
    Word rep = zeros(q, r * k);
    for (int j = 0; j < k; ++j)
      rep.symbols[static_cast<std::size_t>((r - 1) * k + j)] = x.symbols[static_cast<std::size_t>(j)];
    reps.push_back(std::move(rep));
  }
  return reps;
}

Code construct_2r1(int r, int k, int d) {
  const int q = checked_2r1(r);
  if (d < 1 || d > k) throw DomainError("construct_2r1 needs 1 <= d <= k");
  const auto factor = greedy_gv_factor(WeightTable::hamming(q), k, d);
  return coset_lift(group_code_2r1(r, k), embed_factor_reps(q, r, k, factor));
}

}  // namespace cyclecodes::codes
