#pragma once

#include <vector>

#include "nontrans/numeric.hpp"
#include "nontrans/words.hpp"

namespace nontrans {

// Axis-parallel lattice step: `len` units along coordinate `axis` (1-based).
struct Step {
    int axis = 1;
    int len = 1;
    bool operator==(const Step&) const = default;
    auto operator<=>(const Step&) const = default;
};

// Walk from the origin; step t stands for denomination t, so an m-step path
// is exactly a tie-less assignment of denominations 1..m to dice.
struct StepPath {
    std::vector<Step> steps;
    int k = 3;

    bool operator==(const StepPath&) const = default;
};

// k multisets of denominations; m distinct denominations, each on one die.
struct DiceSet {
    std::vector<std::vector<int>> dice;
    int m = 0;

    bool is_tieless() const;
    bool operator==(const DiceSet&) const = default;
};

StepPath unit_path(const Word& w);  // one unit step per letter

// merge consecutive same-axis steps (invariant under it: dice margins)
StepPath merged(const StepPath& p);

DiceSet path_to_dice(const StepPath& p);

// s_i = wins_i - wins_{i+1} margin of die i against die i+1 (cyclic),
// accumulated incrementally along the path.
std::vector<int> generalized_stats(const StepPath& p);

DiceSet rotate_dice(const DiceSet& d, int by);  // die j -> die j+by (cyclic)
DiceSet canonical_rotation(const DiceSet& d);

// All tie-less k-dice sets built from m denominations with the given face
// counts and every cyclic margin >= 1; reduce keeps one lexicographically
// minimal representative per rotation orbit. Deterministic order.
std::vector<DiceSet> enumerate_tieless(int k, const std::vector<int>& faces, int m,
                                       bool reduce, long long cap = 1'000'000);

struct DiceCycleReport {
    std::vector<BeatsCount> pairs;  // die i vs die i+1 (cyclic)
    bool all_strict = false;
};
DiceCycleReport verify_dice_cycle(const std::vector<std::vector<int>>& dice);

}  // namespace nontrans
