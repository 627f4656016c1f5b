#pragma once

#include <optional>
#include <vector>

#include "nontrans/laurent.hpp"
#include "nontrans/numeric.hpp"
#include "nontrans/series.hpp"
#include "nontrans/words.hpp"

namespace nontrans {

struct EngineCaps {
    long long max_stored_terms = 100'000'000;
    long long max_listed = 1'000'000;
};

// Weight enumerator F(a) of W(a) by dynamic programming over graded layers.
// Appending letter j to a word with counts c multiplies the weight by
// q_j^{c_{j+1}} q_{j-1}^{-c_{j-1}} (cyclic), so
//   F(b) = sum_j shift(F(b - e_j), b_{j+1} e_j - b_{j-1} e_{j-1}),  F(0) = 1.
LaurentPoly compute_F(const std::vector<int>& a, const EngineCaps& caps = {});

// Number of sucker's-bet words in W(a): positive part of F evaluated at 1.
BigInt count_suckers(const std::vector<int>& a, const EngineCaps& caps = {});

// count/k for equal deck sizes (cyclic orbits are free).
BigInt count_suckers_reduced(const std::vector<int>& a, const EngineCaps& caps = {});

// count / multinomial(a)
Rational probability(const std::vector<int>& a, const EngineCaps& caps = {});

// All sucker's-bet words of W(a) in lexicographic order; with reduce, one
// canonical representative per cyclic-relabeling orbit (equal sizes only).
// prune=false disables the branch-and-bound cut (oracle mode).
std::vector<Word> enumerate_suckers_words(const std::vector<int>& a, bool reduce,
                                          const EngineCaps& caps = {}, bool prune = true);
std::vector<DeckSet> enumerate_suckers(const std::vector<int>& a, bool reduce,
                                       const EngineCaps& caps = {});

// count_suckers((n,n,n)) for n = 1..n_max, k = 3
std::vector<BigInt> sequence_equal_decks(int n_max, const EngineCaps& caps = {});

// Truncated series of F(a) at q_t = 1 + p_t, exact integer coefficients:
// coefficient of p^alpha is sum_w prod_t C(s_t(w), alpha_t). Same recurrence,
// with the monomial shift becoming multiplication by prod (1+p_t)^{delta_t}.
IntSeries compute_F_series(const std::vector<int>& a, int degree_cap,
                           const EngineCaps& caps = {});

// One DP sweep over the box (n_max,...,n_max) harvesting the equal-counts
// series F(m,m,m) for m = 0..n_max. Far cheaper than n_max separate runs.
std::vector<IntSeries> diagonal_F_series(int k, int n_max, int degree_cap,
                                         const EngineCaps& caps = {});

}  // namespace nontrans
