#include "nontrans/dice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nontrans {

namespace {

void check_path(const StepPath& p) {
    if (p.k < 2 || p.k > 8) throw DomainError("axis count out of range");
    for (const Step& s : p.steps) {
        if (s.axis < 1 || s.axis > p.k) throw DomainError("step axis out of range");
        if (s.len < 1) throw DomainError("step length must be positive");
    }
}

}  // namespace

bool DiceSet::is_tieless() const {
    // a tie needs the same denomination on two different dice; repeats within
    // one die are fine
    std::vector<std::pair<int, int>> owner;  // (denomination, die)
    for (size_t j = 0; j < dice.size(); ++j)
        for (int v : dice[j]) owner.emplace_back(v, static_cast<int>(j));
    std::sort(owner.begin(), owner.end());
    for (size_t i = 1; i < owner.size(); ++i)
        if (owner[i].first == owner[i - 1].first && owner[i].second != owner[i - 1].second)
            return false;
    return true;
}

StepPath unit_path(const Word& w) {
    StepPath p;
    p.k = w.k;
    p.steps.reserve(w.letters.size());
    for (int l : w.letters) p.steps.push_back({l, 1});
    return p;
}

StepPath merged(const StepPath& p) {
    check_path(p);
    StepPath out;
    out.k = p.k;
    for (const Step& s : p.steps) {
        if (!out.steps.empty() && out.steps.back().axis == s.axis)
            out.steps.back().len += s.len;
        else
            out.steps.push_back(s);
    }
    return out;
}

DiceSet path_to_dice(const StepPath& p) {
    check_path(p);
    DiceSet d;
    d.dice.assign(static_cast<size_t>(p.k), {});
    d.m = static_cast<int>(p.steps.size());
    for (size_t t = 0; t < p.steps.size(); ++t) {
        const Step& s = p.steps[t];
        d.dice[static_cast<size_t>(s.axis) - 1]
            .insert(d.dice[static_cast<size_t>(s.axis) - 1].end(),
                    static_cast<size_t>(s.len), static_cast<int>(t) + 1);
    }
    return d;
}

std::vector<int> generalized_stats(const StepPath& p) {
    check_path(p);
    const int k = p.k;
    std::vector<int> s(static_cast<size_t>(k), 0), c(static_cast<size_t>(k), 0);
    for (const Step& st : p.steps) {
        const int j = st.axis - 1;
        s[static_cast<size_t>(j)] += st.len * c[static_cast<size_t>((j + 1) % k)];
        s[static_cast<size_t>((j + k - 1) % k)] -= st.len * c[static_cast<size_t>((j + k - 1) % k)];
        c[static_cast<size_t>(j)] += st.len;
    }
    return s;
}

DiceSet rotate_dice(const DiceSet& d, int by) {
    const int k = static_cast<int>(d.dice.size());
    by = ((by % k) + k) % k;
    DiceSet out;
    out.m = d.m;
    out.dice.assign(static_cast<size_t>(k), {});
    for (int j = 0; j < k; ++j) out.dice[static_cast<size_t>((j + by) % k)] = d.dice[static_cast<size_t>(j)];
    return out;
}

DiceSet canonical_rotation(const DiceSet& d) {
    DiceSet best = d;
    for (int by = 1; by < static_cast<int>(d.dice.size()); ++by) {
        DiceSet cand = rotate_dice(d, by);
        if (cand.dice < best.dice) best = cand;
    }
    return best;
}

std::vector<DiceSet> enumerate_tieless(int k, const std::vector<int>& faces, int m,
                                       bool reduce, long long cap) {
    if (k < 3 || k > 8) throw DomainError("dice enumeration needs 3 <= k <= 8");
    if (static_cast<int>(faces.size()) != k) throw DomainError("faces vector length must equal k");
    for (int f : faces)
        if (f < 1) throw DomainError("face counts must be positive");
    if (m < 1) throw DomainError("denomination count must be positive");

    std::vector<DiceSet> out;
    StepPath path;
    path.k = k;
    std::vector<int> placed(static_cast<size_t>(k), 0), s(static_cast<size_t>(k), 0);

    std::function<void(int)> rec = [&](int t) {
        if (t == m) {
            if (placed != faces) return;
            for (int v : s)
                if (v < 1) return;
            if (static_cast<long long>(out.size()) >= cap)
                throw SizeError("dice listing cap exceeded");
            DiceSet d = path_to_dice(path);
            if (reduce && !(canonical_rotation(d) == d)) return;
            out.push_back(std::move(d));
            return;
        }
        // every unfinished die still needs >= 1 step; total deficit needs
        // >= 1 unit per remaining step
        int open = 0, deficit = 0;
        for (int j = 0; j < k; ++j) {
            int dj = faces[static_cast<size_t>(j)] - placed[static_cast<size_t>(j)];
            deficit += dj;
            if (dj > 0) ++open;
        }
        const int rem = m - t;
        if (open > rem || deficit < rem) return;
        for (int j = 0; j < k; ++j) {
            int dj = faces[static_cast<size_t>(j)] - placed[static_cast<size_t>(j)];
            if (dj == 0) continue;
            const int jp = (j + 1) % k, jm = (j + k - 1) % k;
            for (int len = 1; len <= dj; ++len) {
                path.steps.push_back({j + 1, len});
                s[static_cast<size_t>(j)] += len * placed[static_cast<size_t>(jp)];
                s[static_cast<size_t>(jm)] -= len * placed[static_cast<size_t>(jm)];
                placed[static_cast<size_t>(j)] += len;
                rec(t + 1);
                placed[static_cast<size_t>(j)] -= len;
                s[static_cast<size_t>(jm)] += len * placed[static_cast<size_t>(jm)];
                s[static_cast<size_t>(j)] -= len * placed[static_cast<size_t>(jp)];
                path.steps.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

DiceCycleReport verify_dice_cycle(const std::vector<std::vector<int>>& dice) {
    const int k = static_cast<int>(dice.size());
    DiceCycleReport rep;
    rep.all_strict = k >= 3;
    for (int i = 0; i < k; ++i) {
        BeatsCount bc = beats_count(dice[static_cast<size_t>(i)], dice[static_cast<size_t>((i + 1) % k)]);
        if (bc.wins_a <= bc.wins_b) rep.all_strict = false;
        rep.pairs.push_back(bc);
    }
    return rep;
}

}  // namespace nontrans
