#pragma once

#include <cstddef>
#include <cstdint>

#include "cyclecodes/codes.hpp"

namespace cyclecodes::codes {

struct SearchOptions {
  /// Largest vertex count q^n accepted.
  std::size_t vertex_budget = 1000;
  /// Branch-and-bound node limit; exceeding it raises BudgetExceeded with the
  /// best size found so far.
  std::uint64_t node_limit = 4'000'000'000ULL;
};

struct SearchResult {
  std::size_t size = 0;
  Code witness;
  std::uint64_t nodes = 0;
};

/// M_q(n, d): the largest code in Z_q^n with minimum distance >= d, i.e. the
/// independence number of the graph joining words at distance <= d-1 (for
/// d = infinity, at any finite distance). Exact branch and bound with a
/// greedy clique-cover bound; single threaded and deterministic.
SearchResult alpha_search(int q, int n, ExtDist d, const SearchOptions& opts = {});

}  // namespace cyclecodes::codes
