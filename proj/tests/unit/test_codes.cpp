#include <gtest/gtest.h>

#include <sstream>

#include "cyclecodes/code_io.hpp"
#include "cyclecodes/codes.hpp"
#include "cyclecodes/errors.hpp"
#include "cyclecodes/independent_set.hpp"

using namespace cyclecodes;
using namespace cyclecodes::codes;

namespace {

const ExtDist kInf = ExtDist::infinite();

Code code_of(int q, std::vector<std::vector<int>> rows) {
  std::vector<Word> words;
  for (auto& r : rows) words.emplace_back(q, std::move(r));
  const int n = words.front().length();
  return Code(q, n, std::move(words));
}

ExtDist distance_arg(int d, int n) { return d > n ? kInf : ExtDist(d); }

}  // namespace

TEST(ExtDist, Arithmetic) {
  EXPECT_EQ(ExtDist(2) + ExtDist(3), ExtDist(5));
  EXPECT_TRUE((ExtDist(2) + kInf).is_infinite());
  EXPECT_LT(ExtDist(1000000), kInf);
  EXPECT_EQ(kInf.to_string(), "inf");
  EXPECT_EQ(parse_ext_dist("inf"), kInf);
  EXPECT_EQ(parse_ext_dist("7"), ExtDist(7));
  EXPECT_THROW(parse_ext_dist("-1"), DomainError);
  EXPECT_THROW(parse_ext_dist("3x"), DomainError);
}

TEST(Word, ReducesSymbols) {
  const Word w(5, {7, -1, 5});
  EXPECT_EQ(w.symbols, (std::vector<int>{2, 4, 0}));
  EXPECT_THROW(Word(1, {0}), DomainError);
}

TEST(Dist, Examples) {
  const Word a(5, {0, 1});
  EXPECT_EQ(dist(a, a), ExtDist(0));
  EXPECT_EQ(dist(a, Word(5, {1, 2})), ExtDist(2));
  EXPECT_EQ(dist(a, Word(5, {1, 4})), kInf);
  EXPECT_EQ(dist(Word(5, {0}), Word(5, {4})), ExtDist(1));
  EXPECT_THROW(dist(a, Word(5, {0})), DomainError);
  EXPECT_THROW(dist(a, Word(7, {0, 1})), DomainError);
}

TEST(Dist, BinaryIsHamming) {
  EXPECT_EQ(dist(Word(2, {0, 1, 1}), Word(2, {1, 1, 0})), ExtDist(2));
}

TEST(Dist, MetricProperties) {
  for (int q : {5, 9}) {
    for (int n : {1, 2}) {
      const auto words = all_words(q, n);
      for (const auto& x : words) {
        for (const auto& y : words) {
          const auto dxy = dist(x, y);
          EXPECT_EQ(dxy, dist(y, x));
          EXPECT_EQ(dxy == ExtDist(0), x == y);
          for (const auto& z : words) {
            const auto dxz = dist(x, z), dyz = dist(y, z);
            if (dxy.is_infinite() || dxz.is_infinite() || dyz.is_infinite()) continue;
            ASSERT_LE(dxz, dxy + dyz);
          }
        }
      }
    }
  }
}

TEST(Code, CanonicalForm) {
  const auto c = code_of(5, {{3, 1}, {0, 0}, {3, 1}});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.words().front(), Word(5, {0, 0}));
  EXPECT_TRUE(c.contains(Word(5, {3, 1})));
  EXPECT_THROW(Code(5, 2, {}), DomainError);
  EXPECT_THROW(code_of(5, {{0, 0}, {1}}), DomainError);
}

TEST(Dmin, Examples) {
  EXPECT_EQ(dmin(code_of(5, {{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}})), kInf);
  EXPECT_EQ(dmin(code_of(5, {{0, 0}, {1, 1}})), ExtDist(2));
  EXPECT_EQ(dmin(code_of(5, {{2, 3, 4}})), kInf);
  EXPECT_EQ(dmin(code_of(9, {{0, 0}, {0, 1}, {5, 5}})), ExtDist(1));
}

TEST(Dmin, NeighbourProbeAgreesWithPairwise) {
  // Large codes take the neighbour-probe path; compare with a direct scan.
  const auto words = all_words(5, 3);
  std::vector<Word> half;
  for (std::size_t i = 0; i < words.size(); i += 3) half.push_back(words[i]);
  const Code c(5, 3, half);
  ExtDist best = kInf;
  for (std::size_t i = 0; i < half.size(); ++i)
    for (std::size_t j = i + 1; j < half.size(); ++j) best = std::min(best, dist(half[i], half[j]));
  EXPECT_EQ(dmin(c), best);
}

TEST(Subgroup, Detection) {
  EXPECT_TRUE(is_subgroup(code_of(5, {{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}})));
  EXPECT_FALSE(is_subgroup(code_of(5, {{0, 0}, {1, 2}})));
  EXPECT_FALSE(is_subgroup(code_of(5, {{1, 2}})));
  EXPECT_TRUE(is_subgroup(code_of(5, {{0, 0}})));
}

TEST(Indexing, RoundTrip) {
  for (std::size_t i = 0; i < 125; ++i) EXPECT_EQ(word_index(word_at(5, 3, i)), i);
  EXPECT_EQ(word_index(Word(5, {1, 0, 0})), 25u);
  const auto all = all_words(3, 2);
  ASSERT_EQ(all.size(), 9u);
  EXPECT_EQ(all[4], Word(3, {1, 1}));
}

TEST(AlphaSearch, Pentagon) {
  EXPECT_EQ(alpha_search(5, 1, ExtDist(2)).size, 2u);
  const auto r = alpha_search(5, 2, kInf);
  EXPECT_EQ(r.size, 5u);
  EXPECT_EQ(r.witness.size(), 5u);
  EXPECT_EQ(dmin(r.witness), kInf);
  EXPECT_TRUE(is_maximal_independent(r.witness));
}

TEST(AlphaSearch, ReferenceValues) {
  const std::vector<std::pair<std::pair<int, int>, std::vector<std::size_t>>> table{
      {{5, 1}, {5, 2}},          {{5, 2}, {25, 10, 5}},    {{5, 3}, {125, 50, 20, 10}},
      {{4, 1}, {4, 2}},          {{4, 2}, {16, 8, 4}},     {{4, 3}, {64, 32, 16, 8}},
      {{2, 1}, {2, 1}},          {{2, 2}, {4, 2, 1}},      {{2, 3}, {8, 4, 2, 1}},
      {{9, 2}, {81, 36, 18}}};
  for (const auto& [qn, values] : table) {
    const auto [q, n] = qn;
    for (int d = 1; d <= n + 1; ++d) {
      const auto r = alpha_search(q, n, distance_arg(d, n));
      EXPECT_EQ(r.size, values[static_cast<std::size_t>(d - 1)]) << q << ' ' << n << ' ' << d;
      EXPECT_EQ(r.witness.size(), r.size);
      EXPECT_GE(dmin(r.witness), distance_arg(d, n));
    }
  }
}

TEST(AlphaSearch, EvenCycleEquality) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= n + 1; ++d) {
      const auto m4 = alpha_search(4, n, distance_arg(d, n)).size;
      const auto m2 = alpha_search(2, n, distance_arg(d, n)).size;
      EXPECT_EQ(m4, (std::size_t{1} << n) * m2) << n << ' ' << d;
    }
  }
}

TEST(AlphaSearch, MonotoneInDistance) {
  for (int q : {5, 6, 7}) {
    const int n = 2;
    std::size_t prev = alpha_search(q, n, ExtDist(1)).size;
    for (int d = 2; d <= n + 1; ++d) {
      const auto cur = alpha_search(q, n, distance_arg(d, n)).size;
      EXPECT_LE(cur, prev);
      prev = cur;
    }
  }
}

TEST(AlphaSearch, Deterministic) {
  const auto a = alpha_search(5, 3, ExtDist(2));
  const auto b = alpha_search(5, 3, ExtDist(2));
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(AlphaSearch, Budgets) {
  EXPECT_THROW(alpha_search(5, 5, ExtDist(2)), BudgetExceeded);
  SearchOptions tiny;
  tiny.node_limit = 3;
  try {
    alpha_search(5, 3, ExtDist(2), tiny);
    ADD_FAILURE() << "node limit ignored";
  } catch (const BudgetExceeded& e) {
    EXPECT_GE(e.best_known(), 1u);
  }
  EXPECT_THROW(alpha_search(5, 2, ExtDist(0)), DomainError);
}

TEST(MaximalIndependent, Detection) {
  EXPECT_TRUE(is_maximal_independent(code_of(5, {{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}})));
  EXPECT_FALSE(is_maximal_independent(code_of(5, {{0, 0}, {1, 2}})));
  EXPECT_FALSE(is_maximal_independent(code_of(5, {{0, 0}, {1, 1}})));
}

TEST(CodeIo, RoundTrip) {
  const auto c = alpha_search(5, 3, ExtDist(2)).witness;
  std::stringstream ss;
  write_code(ss, c);
  EXPECT_EQ(ss.str().find('\r'), std::string::npos);
  EXPECT_EQ(read_code(ss), c);
}

TEST(CodeIo, CanonicalWrite) {
  std::stringstream ss;
  write_code(ss, code_of(5, {{4, 3}, {0, 0}}));
  EXPECT_EQ(ss.str(), "5 2\n0 0\n4 3\n");
}

TEST(CodeIo, Malformed) {
  auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream is(text);
    try {
      read_code(is);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  };
  expect_line("", 1);
  expect_line("5\n", 1);
  expect_line("5 2\n0 0\n1 5\n", 3);
  expect_line("5 2\n0 0\n1 -1\n", 3);
  expect_line("5 2\n0 0 0\n", 2);
  expect_line("5 2\n0 a\n", 2);
  expect_line("5 2\r\n0 0\r\n", 2);
  expect_line("5 2\n", 2);
}

TEST(CodeIo, BlankLinesSkipped) {
  std::istringstream is("5 2\n0 0\n\n1 2\n");
  EXPECT_EQ(read_code(is).size(), 2u);
}
