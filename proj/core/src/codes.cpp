#include "cyclecodes/codes.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "cyclecodes/errors.hpp"

namespace cyclecodes::codes {

namespace {

int mod(int a, int q) {
  const int r = a % q;
  return r < 0 ? r + q : r;
}

void require_same_shape(const Word& a, const Word& b) {
  if (a.q != b.q || a.symbols.size() != b.symbols.size())
    throw DomainError("words differ in alphabet or length");
}

std::size_t checked_space_size(int q, int n) {
  double total = std::pow(static_cast<double>(q), n);
  if (total > 1e9) throw BudgetExceeded("q^n is too large to enumerate");
  return static_cast<std::size_t>(std::llround(total));
}

}  // namespace

ExtDist parse_ext_dist(const std::string& s) {
  if (s == "inf" || s == "INF" || s == "infinity") return ExtDist::infinite();
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw DomainError("not a distance: " + s);
  }
  if (pos != s.size() || v < 0) throw DomainError("not a distance: " + s);
  return ExtDist(v);
}

Word::Word(int q_, std::vector<int> s) : q(q_), symbols(std::move(s)) {
  if (q < 2) throw DomainError("alphabet size must be at least 2");
  for (int& x : symbols) x = mod(x, q);
}

Word operator+(const Word& a, const Word& b) {
  require_same_shape(a, b);
  Word r = a;
  for (std::size_t i = 0; i < r.symbols.size(); ++i) r.symbols[i] = mod(a.symbols[i] + b.symbols[i], a.q);
  return r;
}

Word operator-(const Word& a, const Word& b) {
  require_same_shape(a, b);
  Word r = a;
  for (std::size_t i = 0; i < r.symbols.size(); ++i) r.symbols[i] = mod(a.symbols[i] - b.symbols[i], a.q);
  return r;
}

Code::Code(int q, int n, std::vector<Word> words) : q_(q), n_(n), words_(std::move(words)) {
  if (q < 2 || n < 1) throw DomainError("code needs q >= 2 and n >= 1");
  if (words_.empty()) throw DomainError("code must contain at least one word");
  for (const auto& w : words_)
    if (w.q != q || w.length() != n) throw DomainError("word shape differs from code shape");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

ExtDist dist(const Word& x, const Word& y) {
  require_same_shape(x, y);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < x.symbols.size(); ++i) {
    const int diff = mod(x.symbols[i] - y.symbols[i], x.q);
    if (diff == 0) continue;
    if (diff == 1 || diff == x.q - 1)
      ++total;
    else
      return ExtDist::infinite();
  }
  return ExtDist(total);
}

ExtDist weight(const Word& x) { return dist(x, Word(x.q, std::vector<int>(x.symbols.size(), 0))); }

std::vector<Word> all_words(int q, int n) {
  const std::size_t total = checked_space_size(q, n);
  std::vector<Word> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) out.push_back(word_at(q, n, i));
  return out;
}

std::size_t word_index(const Word& w) {
  std::size_t idx = 0;
  for (int s : w.symbols) idx = idx * static_cast<std::size_t>(w.q) + static_cast<std::size_t>(s);
  return idx;
}

Word word_at(int q, int n, std::size_t index) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(q));
    index /= static_cast<std::size_t>(q);
  }
  return Word(q, std::move(s));
}

ExtDist dmin(const Code& code) {
  const auto& words = code.words();
  const std::size_t m = words.size();
  if (m < 2) return ExtDist::infinite();
  const int n = code.n();
  const int q = code.q();

  // Only offsets in {0, +-1}^n give finite distances. When there are fewer of
  // those than codewords, probe them around each word instead of all pairs.
  const double offsets = std::pow(q == 2 ? 2.0 : 3.0, n);
  if (offsets >= static_cast<double>(m)) {
    ExtDist best = ExtDist::infinite();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) best = std::min(best, dist(words[i], words[j]));
    return best;
  }

  std::unordered_set<std::size_t> index;
  index.reserve(m * 2);
  for (const auto& w : words) index.insert(word_index(w));

  // Offset patterns over {0, 1, -1} (binary: {0, 1}), skipping the zero pattern.
  const std::vector<int> steps = q == 2 ? std::vector<int>{0, 1} : std::vector<int>{0, 1, -1};
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<std::vector<int>, int>> patterns;
  for (;;) {
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == static_cast<int>(steps.size())) digits[i++] = 0;
    if (i == digits.size()) break;
    std::vector<int> off(static_cast<std::size_t>(n));
    int w = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      off[k] = steps[static_cast<std::size_t>(digits[k])];
      w += off[k] != 0;
    }
    patterns.emplace_back(std::move(off), w);
  }
  std::sort(patterns.begin(), patterns.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });

  for (const auto& w : words) {
    for (const auto& [off, wt] : patterns) {
      if (wt >= best) break;
      std::size_t idx = 0;
      for (int k = 0; k < n; ++k)
        idx = idx * static_cast<std::size_t>(q) +
              static_cast<std::size_t>(mod(w.symbols[static_cast<std::size_t>(k)] + off[static_cast<std::size_t>(k)], q));
      if (index.contains(idx)) {
        best = wt;
        break;
      }
    }
    if (best == 1) break;
  }
  return best == std::numeric_limits<std::int64_t>::max() ? ExtDist::infinite() : ExtDist(best);
}

bool is_subgroup(const Code& code) {
  const Word zero(code.q(), std::vector<int>(static_cast<std::size_t>(code.n()), 0));
  if (!code.contains(zero)) return false;
  // A finite set containing 0 and closed under addition is a subgroup.
  std::unordered_set<std::size_t> index;
  index.reserve(code.size() * 2);
  for (const auto& w : code.words()) index.insert(word_index(w));
  const int q = code.q();
  for (const auto& a : code.words())
    for (const auto& b : code.words()) {
      std::size_t idx = 0;
      for (std::size_t k = 0; k < a.symbols.size(); ++k)
        idx = idx * static_cast<std::size_t>(q) + static_cast<std::size_t>((a.symbols[k] + b.symbols[k]) % q);
      if (!index.contains(idx)) return false;
    }
  return true;
}

bool is_maximal_independent(const Code& code) {
  if (!dmin(code).is_infinite()) return false;
  for (const auto& v : all_words(code.q(), code.n())) {
    if (code.contains(v)) continue;
    const bool blocked = std::any_of(code.words().begin(), code.words().end(),
                                     [&](const Word& c) { return !dist(v, c).is_infinite(); });
    if (!blocked) return false;
  }
  return true;
}

}  // namespace cyclecodes::codes
