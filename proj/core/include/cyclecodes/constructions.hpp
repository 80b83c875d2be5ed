#pragma once

// Constructive lower bounds: coset lifting of a subgroup code by a factor
// code, with the even-cycle, pentagon and q = 2^r + 1 instances.

#include <vector>

#include "cyclecodes/codes.hpp"
#include "cyclecodes/weight_table.hpp"

namespace cyclecodes::codes {

/// Additive weight sum_i w(x_i) under a table with integer (or infinite)
/// entries.
ExtDist table_weight(const Word& x, const WeightTable& weights);

/// Words 0..q^k-1 (lexicographic scan) kept whenever their table distance
/// to every kept word is >= d_w.
std::vector<Word> greedy_gv_factor(const WeightTable& weights, int k, std::int64_t d_w);

/// Number of words of Z_q^k with table weight <= radius.
std::size_t table_ball_size(const WeightTable& weights, int k, std::int64_t radius);

/// {0, 2, ..., q-2}^n + binary_code for even q.
Code construct_even(int q, const Code& binary_code);

/// F_5-row span of [1,2] (x) I_k = [I_k | 2 I_k]: the words (a, 2a), a in F_5^k.
/// Coordinate i pairs with coordinate k + i.
Code pentagon_base_code(int k);

/// min over the coset rep + group_code of the cycle-semimetric weight.
/// Throws DomainError if group_code is not a subgroup.
ExtDist factor_weight(const Code& group_code, const Word& rep);

/// Union of the cosets rep + group_code. Throws DomainError if group_code is
/// not a subgroup or two reps share a coset.
Code coset_lift(const Code& group_code, const std::vector<Word>& factor_reps);

/// Lift of a greedy Hamming-distance-d code in F_5^k through x' -> (0^k, x').
Code construct_pentagon(int k, int d);

/// C_q-row span of [I_{(r-1)k} | (2 I_k; 4 I_k; ...; 2^{r-1} I_k)],
/// q = 2^r + 1: the words (a, sum_i 2^i a^(i)) with a^(i) the i-th k-block.
Code group_code_2r1(int r, int k);

/// Lift of a greedy q-ary Hamming-distance-d code of length k through
/// x' -> (0^{(r-1)k}, x').
Code construct_2r1(int r, int k, int d);

/// Factor reps (0^{(r-1)k}, x') for the given factor words.
std::vector<Word> embed_factor_reps(int q, int r, int k, const std::vector<Word>& factor_words);

}  // namespace cyclecodes::codes
