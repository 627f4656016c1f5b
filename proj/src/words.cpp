#include "nontrans/words.hpp"

#include <algorithm>
#include <map>

namespace nontrans {

Word::Word(std::vector<int> ls, int alphabet) : letters(std::move(ls)), k(alphabet) {
    if (k < 1 || k > 8) throw DomainError("alphabet size out of range");
    for (int l : letters)
        if (l < 1 || l > k) throw DomainError("letter outside alphabet");
}

Word Word::parse(const std::string& digits, int alphabet) {
    std::vector<int> ls;
    ls.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9') throw DomainError("word must be a digit string");
        ls.push_back(c - '0');
    }
    return Word(std::move(ls), alphabet);
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters.size());
    for (int l : letters) s.push_back(static_cast<char>('0' + l));
    return s;
}

int DeckSet::total_cards() const {
    int n = 0;
    for (const auto& d : decks) n += static_cast<int>(d.size());
    return n;
}

bool DeckSet::is_standard_form() const {
    std::vector<int> all;
    for (const auto& d : decks) {
        if (!std::is_sorted(d.begin(), d.end())) return false;
        all.insert(all.end(), d.begin(), d.end());
    }
    std::sort(all.begin(), all.end());
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<int> stats(const Word& w) {
    const int k = w.k;
    std::vector<int> s(static_cast<size_t>(k), 0), c(static_cast<size_t>(k), 0);
    for (int l : w.letters) {
        int j = l - 1;
        s[static_cast<size_t>(j)] += c[static_cast<size_t>((j + 1) % k)];
        s[static_cast<size_t>((j + k - 1) % k)] -= c[static_cast<size_t>((j + k - 1) % k)];
        ++c[static_cast<size_t>(j)];
    }
    return s;
}

bool is_sbc(const Word& w) {
    for (int v : stats(w))
        if (v < 1) return false;
    return true;
}

DeckSet word_to_decks(const Word& w) {
    DeckSet d;
    d.decks.assign(static_cast<size_t>(w.k), {});
    for (size_t i = 0; i < w.letters.size(); ++i)
        d.decks[static_cast<size_t>(w.letters[i] - 1)].push_back(static_cast<int>(i) + 1);
    return d;
}

Word decks_to_word(const DeckSet& d, int k) {
    if (k == 0) k = static_cast<int>(d.decks.size());
    if (k != static_cast<int>(d.decks.size())) throw DomainError("deck count mismatch");
    if (!d.is_standard_form())
        throw DomainError("deck set not in standard form (denominations must be exactly 1..N)");
    std::vector<int> ls(static_cast<size_t>(d.total_cards()), 0);
    for (int j = 0; j < k; ++j)
        for (int denom : d.decks[static_cast<size_t>(j)])
            ls[static_cast<size_t>(denom) - 1] = j + 1;
    return Word(std::move(ls), k);
}

DeckSet rank_normalize(const DeckSet& d) {
    std::vector<int> all;
    for (const auto& deck : d.decks) all.insert(all.end(), deck.begin(), deck.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw DomainError("duplicate denominations cannot be rank-normalized");
    std::map<int, int> rank;
    for (size_t i = 0; i < all.size(); ++i) rank[all[i]] = static_cast<int>(i) + 1;
    DeckSet out;
    out.decks.reserve(d.decks.size());
    for (const auto& deck : d.decks) {
        std::vector<int> nd;
        nd.reserve(deck.size());
        for (int x : deck) nd.push_back(rank.at(x));
        std::sort(nd.begin(), nd.end());
        out.decks.push_back(std::move(nd));
    }
    return out;
}

BeatsCount beats_count(const std::vector<int>& a, const std::vector<int>& b) {
    BeatsCount r;
    for (int x : a)
        for (int y : b) {
            if (x > y)
                ++r.wins_a;
            else if (x < y)
                ++r.wins_b;
            else
                ++r.ties;
        }
    return r;
}

bool is_suckers_bet(const std::vector<std::vector<int>>& decks) {
    const int k = static_cast<int>(decks.size());
    if (k < 3) throw DomainError("sucker's bet needs at least 3 decks");
    for (int i = 0; i < k; ++i) {
        auto r = beats_count(decks[static_cast<size_t>(i)], decks[static_cast<size_t>((i + 1) % k)]);
        if (r.wins_a <= r.wins_b) return false;
    }
    return true;
}

Word relabel(const Word& w, int shift) {
    const int k = w.k;
    shift = ((shift % k) + k) % k;
    std::vector<int> ls;
    ls.reserve(w.letters.size());
    for (int l : w.letters) ls.push_back((l - 1 + shift) % k + 1);
    return Word(std::move(ls), k);
}

Word canonical_cyclic(const Word& w) {
    Word best = w;
    for (int sh = 1; sh < w.k; ++sh) {
        Word cand = relabel(w, sh);
        if (cand.letters < best.letters) best = cand;
    }
    return best;
}

namespace {

std::vector<int> sorted_letter_pool(const std::vector<int>& a, long long cap) {
    const int k = static_cast<int>(a.size());
    if (k < 1 || k > 8) throw DomainError("alphabet size out of range");
    for (int v : a)
        if (v < 0) throw DomainError("negative multiplicity");
    if (multinomial(a) > cap) throw SizeError("word class too large for brute force");
    std::vector<int> pool;
    for (int j = 0; j < k; ++j)
        pool.insert(pool.end(), static_cast<size_t>(a[static_cast<size_t>(j)]), j + 1);
    return pool;
}

}  // namespace

LaurentPoly brute_force_F(const std::vector<int>& a, long long cap) {
    const int k = static_cast<int>(a.size());
    std::vector<int> pool = sorted_letter_pool(a, cap);
    std::map<ExponentVec, BigInt> acc;
    do {
        Word w(pool, k);
        auto s = stats(w);
        ExponentVec e(k);
        for (int i = 0; i < k; ++i) e[i] = s[static_cast<size_t>(i)];
        ++acc[e];
    } while (std::next_permutation(pool.begin(), pool.end()));
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc) terms.push_back({e, c});
    return LaurentPoly::from_terms(k, std::move(terms));
}

std::vector<Word> all_words(const std::vector<int>& a, long long cap) {
    const int k = static_cast<int>(a.size());
    std::vector<int> pool = sorted_letter_pool(a, cap);
    std::vector<Word> out;
    do {
        out.emplace_back(pool, k);
    } while (std::next_permutation(pool.begin(), pool.end()));
    return out;
}

}  // namespace nontrans
