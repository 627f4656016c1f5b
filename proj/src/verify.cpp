#include "nontrans/verify.hpp"

#include <algorithm>
#include <numeric>

#include "nontrans/words.hpp"

namespace nontrans {

namespace {

std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

void check_vectors(VerifyReport& rep, int k, int max_total, const FComputer& f) {
    std::vector<int> a(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == k - 1) {
            a[static_cast<size_t>(i)] = rem;
        } else {
            for (int v = 0; v <= rem; ++v) {
                a[static_cast<size_t>(i)] = v;
                rec(i + 1, rem - v);
            }
            return;
        }
        LaurentPoly dp = f(a);
        LaurentPoly oracle = brute_force_F(a);
        ++rep.checks;
        if (!(dp == oracle)) {
            rep.fail("F mismatch at a=" + vec_str(a) + " k=" + std::to_string(k));
            return;
        }
        ++rep.checks;
        if (!(dp == dp.reciprocal_substitution()))
            rep.fail("reversal symmetry broken at a=" + vec_str(a));
        if (std::all_of(a.begin(), a.end(), [&](int x) { return x == a[0]; })) {
            ++rep.checks;
            if (!(dp == dp.variables_rotated(1)))
                rep.fail("cyclic symmetry broken at a=" + vec_str(a));
        }
    };
    for (int total = 0; total <= max_total; ++total)
        for (int v = 0; v <= total; ++v) {
            a[0] = v;
            rec(1, total - v);
        }
}

void check_sbc_words(VerifyReport& rep, int max_letters) {
    // every k=3 word up to the length bound, by multiplicity class
    for (int total = 0; total <= max_letters; ++total) {
        for (int a1 = 0; a1 <= total; ++a1)
            for (int a2 = 0; a2 + a1 <= total; ++a2) {
                std::vector<int> a{a1, a2, total - a1 - a2};
                for (const Word& w : all_words(a)) {
                    ++rep.checks;
                    bool stat_side = is_sbc(w);
                    bool deck_side = is_suckers_bet(word_to_decks(w).decks);
                    if (stat_side != deck_side) {
                        rep.fail("stat/dominance mismatch at word " + w.str());
                        return;
                    }
                }
            }
    }
}

}  // namespace

VerifyReport run_verification(int max_total, const FComputer& f_impl) {
    if (max_total < 0) throw DomainError("max_total must be nonnegative");
    FComputer f = f_impl ? f_impl : [](const std::vector<int>& a) { return compute_F(a); };
    VerifyReport rep;
    check_vectors(rep, 3, max_total, f);
    if (max_total >= 2) check_vectors(rep, 4, max_total - 2, f);
    check_sbc_words(rep, max_total > 9 ? 9 : max_total);
    return rep;
}

}  // namespace nontrans
