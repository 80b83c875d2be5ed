#pragma once

// Words and codes over Z_q with the cycle semimetric: per coordinate 0 if
// equal, 1 if adjacent on C_q (difference +-1 mod q), infinity otherwise,
// summed with infinity absorbing. q = 2 is the binary Hamming space K_2.

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cyclecodes/weight_table.hpp"

namespace cyclecodes::codes {

/// Nonnegative integer or +infinity.
class ExtDist {
 public:
  constexpr ExtDist() = default;
  constexpr explicit ExtDist(std::int64_t v) : v_(v) {}

  static constexpr ExtDist infinite() { return ExtDist(kInf); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr std::int64_t value() const { return v_; }

  constexpr ExtDist operator+(ExtDist o) const {
    return (is_infinite() || o.is_infinite()) ? infinite() : ExtDist(v_ + o.v_);
  }
  constexpr auto operator<=>(const ExtDist&) const = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t v_ = 0;
};

/// Parses a nonnegative integer or "inf".
ExtDist parse_ext_dist(const std::string& s);

struct Word {
  int q = 0;
  std::vector<int> symbols;

  Word() = default;
  /// Reduces every symbol mod q.
  Word(int q, std::vector<int> symbols);

  int length() const { return static_cast<int>(symbols.size()); }
  auto operator<=>(const Word&) const = default;
};

Word operator+(const Word& a, const Word& b);
Word operator-(const Word& a, const Word& b);

/// Deduplicated, lexicographically ordered set of words of equal (q, n).
class Code {
 public:
  Code(int q, int n, std::vector<Word> words);

  int q() const { return q_; }
  int n() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  bool contains(const Word& w) const;

  bool operator==(const Code&) const = default;

 private:
  int q_;
  int n_;
  std::vector<Word> words_;
};

ExtDist dist(const Word& x, const Word& y);

/// dist(x, 0).
ExtDist weight(const Word& x);

/// Minimum pairwise distance; infinity for a single word.
ExtDist dmin(const Code& code);

/// Whether the code contains 0 and is closed under addition mod q.
bool is_subgroup(const Code& code);

/// Whether no two words are at finite distance (an independent set of the
/// strong power) and every other vertex of Z_q^n is at finite distance from
/// some word. Enumerates all q^n vertices.
bool is_maximal_independent(const Code& code);

/// Lexicographic enumeration of Z_q^n.
std::vector<Word> all_words(int q, int n);

/// Mixed-radix index of a word (first symbol most significant) and inverse.
std::size_t word_index(const Word& w);
Word word_at(int q, int n, std::size_t index);

}  // namespace cyclecodes::codes
