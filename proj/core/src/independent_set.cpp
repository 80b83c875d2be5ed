#include "cyclecodes/independent_set.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "cyclecodes/errors.hpp"

namespace cyclecodes::codes {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : bits_((n + 63) / 64, 0) {}

  void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { bits_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1U; }

  bool none() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  // Index of the lowest set bit; call only when !none().
  std::size_t first() const {
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(bits_[k]));
    return bits_.size() * 64;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= o.bits_[k];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= ~o.bits_[k];
    return *this;
  }

 private:
  std::vector<std::uint64_t> bits_;
};

// Maximum clique in the compatibility graph (words at distance >= d), which is
// a maximum independent set of the conflict graph. Greedy colouring of the
// compatibility graph is a clique cover of the conflict graph and bounds the
// remaining gain.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bitset> adj, std::uint64_t node_limit)
      : adj_(std::move(adj)), n_(adj_.size()), node_limit_(node_limit) {}

  std::vector<std::size_t> run() {
    Bitset all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    greedy(all);
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::size_t best_size() const { return best_.size(); }

 private:
  // Initial incumbent: first-fit clique in search order.
  void greedy(Bitset p) {
    while (!p.none()) {
      const std::size_t v = p.first();
      best_.push_back(v);
      p.reset(v);
      p &= adj_[v];
    }
  }

  void colour_sort(const Bitset& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) {
    Bitset uncoloured = p;
    std::size_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      Bitset cls = uncoloured;
      while (!cls.none()) {
        const std::size_t v = cls.first();
        cls.reset(v);
        cls.and_not(adj_[v]);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bitset p) {
    if (++nodes_ > node_limit_)
      throw BudgetExceeded("branch-and-bound node limit reached", best_.size());
    std::vector<std::size_t> order, colour;
    colour_sort(p, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bitset next = p;
      next &= adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      p.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  std::size_t n_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> best_;
};

}  // namespace

SearchResult alpha_search(int q, int n, ExtDist d, const SearchOptions& opts) {
  if (q < 2 || n < 1) throw DomainError("alpha_search needs q >= 2, n >= 1");
  if (d < ExtDist(1)) throw DomainError("minimum distance must be at least 1");
  const double total = std::pow(static_cast<double>(q), n);
  if (total > static_cast<double>(opts.vertex_budget))
    throw BudgetExceeded("q^n = " + std::to_string(static_cast<long long>(total)) +
                         " exceeds the vertex budget " + std::to_string(opts.vertex_budget));

  const auto words = all_words(q, n);
  const std::size_t m = words.size();

  // Compatible pairs: distance >= d (for d = inf, only infinite distance).
  std::vector<std::vector<bool>> compat(m, std::vector<bool>(m, false));
  std::vector<std::size_t> degree(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (dist(words[i], words[j]) >= d) {
        compat[i][j] = compat[j][i] = true;
        ++degree[i];
        ++degree[j];
      }

  // Degree-descending order, ties by lexicographic word order.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  std::vector<Bitset> adj(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (compat[order[a]][order[b]]) adj[a].set(b);

  CliqueSearch search(std::move(adj), opts.node_limit);
  const auto best = search.run();

  std::vector<Word> witness;
  witness.reserve(best.size());
  for (std::size_t v : best) witness.push_back(words[order[v]]);
  return SearchResult{best.size(), Code(q, n, std::move(witness)), search.nodes()};
}

}  // namespace cyclecodes::codes
