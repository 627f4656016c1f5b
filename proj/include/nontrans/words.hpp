#pragma once

#include <string>
#include <vector>

#include "nontrans/laurent.hpp"
#include "nontrans/numeric.hpp"

namespace nontrans {

// Word over the alphabet {1..k}.
struct Word {
    std::vector<int> letters;
    int k = 3;

    Word() = default;
    Word(std::vector<int> ls, int alphabet);
    // digits only, e.g. "132321213"
    static Word parse(const std::string& digits, int alphabet);
    std::string str() const;
    bool operator==(const Word&) const = default;
};

// k decks of pairwise-distinct denominations, each sorted ascending.
// Standard form: denominations are exactly {1..N}.
struct DeckSet {
    std::vector<std::vector<int>> decks;

    int total_cards() const;
    bool is_standard_form() const;
    bool operator==(const DeckSet&) const = default;
};

// s[i] = #{pairs with letter i+2 before letter i+1} - #{the reverse}, indices
// 0-based and cyclic (s[k-1] pairs letters 1 and k).
std::vector<int> stats(const Word& w);

// every statistic >= 1
bool is_sbc(const Word& w);

// card of denomination i goes into deck w_i
DeckSet word_to_decks(const Word& w);

// inverse bijection; requires standard form
Word decks_to_word(const DeckSet& d, int k = 0);

// map arbitrary pairwise-distinct denominations to 1..N by rank
DeckSet rank_normalize(const DeckSet& d);

struct BeatsCount {
    long long wins_a = 0, wins_b = 0, ties = 0;
};
BeatsCount beats_count(const std::vector<int>& a, const std::vector<int>& b);

// deck i strictly beats deck i+1 cyclically, for all i
bool is_suckers_bet(const std::vector<std::vector<int>>& decks);

Word relabel(const Word& w, int shift);  // letter l -> ((l-1+shift) mod k)+1

// lexicographically smallest of the k cyclic relabelings
Word canonical_cyclic(const Word& w);

// Direct-summation weight enumerator over all words with letter
// multiplicities a: sum_w q^{stats(w)}.
LaurentPoly brute_force_F(const std::vector<int>& a, long long cap = 1'000'000);

// All words with multiplicities a in lexicographic order (oracle helper).
std::vector<Word> all_words(const std::vector<int>& a, long long cap = 1'000'000);

}  // namespace nontrans
