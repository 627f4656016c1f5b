#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "nontrans/dice.hpp"
#include "nontrans/words.hpp"

using namespace nontrans;

namespace {

// The classical four-dice cycle with denominations shifted to 1..7:
// each die beats the next with probability 24/36.
const std::vector<std::vector<int>> kEfron{
    {1, 1, 5, 5, 5, 5}, {4, 4, 4, 4, 4, 4}, {3, 3, 3, 3, 7, 7}, {2, 2, 2, 6, 6, 6}};

StepPath random_path(std::mt19937& rng, int k, int m, int max_len) {
    std::uniform_int_distribution<int> axis(1, k), len(1, max_len);
    StepPath p;
    p.k = k;
    for (int t = 0; t < m; ++t) p.steps.push_back({axis(rng), len(rng)});
    return p;
}

}  // namespace

TEST_CASE("unit paths reproduce word statistics") {
    Word magic = Word::parse("132321213", 3);
    StepPath p = unit_path(magic);
    REQUIRE(p.steps.size() == 9);
    CHECK(p.steps[0] == Step{1, 1});
    CHECK(p.steps[1] == Step{3, 1});
    CHECK(generalized_stats(p) == stats(magic));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 3 + trial % 3;
        std::uniform_int_distribution<int> letter(1, k);
        std::vector<int> ls(static_cast<size_t>(1 + trial % 11));
        for (auto& l : ls) l = letter(rng);
        Word w(ls, k);
        CHECK(generalized_stats(unit_path(w)) == stats(w));
    }
}

TEST_CASE("paths map to dice with one denomination per step") {
    Word magic = Word::parse("132321213", 3);
    DiceSet d = path_to_dice(unit_path(magic));
    CHECK(d.m == 9);
    CHECK(d.dice == std::vector<std::vector<int>>{{1, 6, 8}, {3, 5, 7}, {2, 4, 9}});
    CHECK(d.is_tieless());

    StepPath one_step{{{2, 6}}, 4};
    DiceSet single = path_to_dice(one_step);
    CHECK(single.m == 1);
    CHECK(single.dice == std::vector<std::vector<int>>{{}, {1, 1, 1, 1, 1, 1}, {}, {}});
    CHECK(generalized_stats(one_step) == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("the classical four-dice cycle") {
    // as a path: denominations 1..7 in order, one step each
    StepPath p{{{1, 2}, {4, 3}, {3, 4}, {2, 6}, {1, 4}, {4, 3}, {3, 2}}, 4};
    DiceSet d = path_to_dice(p);
    CHECK(d.dice == kEfron);
    CHECK(d.is_tieless());
    CHECK(generalized_stats(p) == std::vector<int>{12, 12, 12, 12});

    DiceCycleReport rep = verify_dice_cycle(kEfron);
    CHECK(rep.all_strict);
    REQUIRE(rep.pairs.size() == 4);
    for (const auto& pair : rep.pairs) {
        CHECK(pair.wins_a == 24);
        CHECK(pair.wins_b == 12);
        CHECK(pair.ties == 0);
    }
}

TEST_CASE("cycle verification on decks and on a transitive set") {
    DiceCycleReport magic = verify_dice_cycle({{1, 6, 8}, {3, 5, 7}, {2, 4, 9}});
    CHECK(magic.all_strict);
    for (const auto& pair : magic.pairs) {
        CHECK(pair.wins_a == 5);
        CHECK(pair.wins_b == 4);
    }
    CHECK_FALSE(verify_dice_cycle({{1}, {2}, {3}}).all_strict);
}

TEST_CASE("merging same-axis runs changes nothing observable") {
    StepPath p{{{1, 1}, {1, 2}, {2, 1}, {2, 3}, {1, 1}}, 3};
    StepPath m = merged(p);
    CHECK(m.steps == std::vector<Step>{{1, 3}, {2, 4}, {1, 1}});
    CHECK(generalized_stats(m) == generalized_stats(p));

    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        StepPath q = random_path(rng, 3 + trial % 2, 1 + trial % 8, 3);
        StepPath qm = merged(q);
        CHECK(generalized_stats(qm) == generalized_stats(q));
        CHECK(merged(qm) == qm);
        // pairwise win counts of the dice are invariant too
        auto a = verify_dice_cycle(path_to_dice(q).dice);
        auto b = verify_dice_cycle(path_to_dice(qm).dice);
        REQUIRE(a.pairs.size() == b.pairs.size());
        for (size_t i = 0; i < a.pairs.size(); ++i) {
            CHECK(a.pairs[i].wins_a == b.pairs[i].wins_a);
            CHECK(a.pairs[i].wins_b == b.pairs[i].wins_b);
            CHECK(a.pairs[i].ties == b.pairs[i].ties);
        }
    }
}

TEST_CASE("rotation orbit mechanics") {
    DiceSet d{kEfron, 7};
    CHECK(rotate_dice(d, 4) == d);
    CHECK(rotate_dice(rotate_dice(d, 1), 3) == d);
    CHECK(rotate_dice(d, 1) != d);
    DiceSet c = canonical_rotation(d);
    CHECK(canonical_rotation(c) == c);
    bool found = false;
    for (int by = 0; by < 4; ++by) {
        DiceSet r = rotate_dice(d, by);
        CHECK_FALSE(r.dice < c.dice);
        if (r == c) found = true;
    }
    CHECK(found);
}

TEST_CASE("six-sided four-dice enumeration, six denominations") {
    auto sets = enumerate_tieless(4, {6, 6, 6, 6}, 6, /*reduce=*/true);
    REQUIRE(sets.size() == 1);
    DiceSet expected{{{1, 1, 5, 5, 5, 5},
                      {4, 4, 4, 4, 4, 4},
                      {3, 3, 3, 3, 3, 3},
                      {2, 2, 2, 2, 6, 6}},
                     6};
    CHECK(sets[0] == canonical_rotation(expected));
    CHECK(verify_dice_cycle(sets[0].dice).all_strict);
    // without reduction: one set per rotation, and all four are distinct
    auto full = enumerate_tieless(4, {6, 6, 6, 6}, 6, false);
    CHECK(full.size() == 4);
}

TEST_CASE("six-sided four-dice enumeration, seven denominations") {
    auto sets = enumerate_tieless(4, {6, 6, 6, 6}, 7, true);
    CHECK(sets.size() == 38);
    DiceSet efron{kEfron, 7};
    CHECK(std::find(sets.begin(), sets.end(), canonical_rotation(efron)) != sets.end());
    for (const auto& s : sets) {
        CHECK(s.is_tieless());
        CHECK(verify_dice_cycle(s.dice).all_strict);
        CHECK(canonical_rotation(s) == s);
    }
    auto full = enumerate_tieless(4, {6, 6, 6, 6}, 7, false);
    CHECK(full.size() == 152);
    // deterministic order, no repeats
    auto copy = full;
    std::sort(copy.begin(), copy.end(),
              [](const DiceSet& a, const DiceSet& b) { return a.dice < b.dice; });
    CHECK(std::adjacent_find(copy.begin(), copy.end()) == copy.end());
    CHECK(full == enumerate_tieless(4, {6, 6, 6, 6}, 7, false));
}

TEST_CASE("deck counting is the all-unit-faces special case") {
    // face counts (3,3,3) with nine denominations force unit steps, so this
    // is exactly the 9-card three-deck count
    CHECK(enumerate_tieless(3, {3, 3, 3}, 9, true).size() == 5);
    CHECK(enumerate_tieless(3, {3, 3, 3}, 9, false).size() == 15);
}

TEST_CASE("listing cap trips cleanly") {
    CHECK_THROWS_AS((void)enumerate_tieless(4, {6, 6, 6, 6}, 7, false, 10), SizeError);
}
