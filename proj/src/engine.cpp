#include "nontrans/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>

namespace nontrans {

namespace {

void check_counts(const std::vector<int>& a) {
    if (a.size() < 2 || a.size() > 8) throw DomainError("deck-size vector length out of range");
    for (int v : a) {
        if (v < 0) throw DomainError("negative deck size");
        if (v > 255) throw DomainError("deck size too large");  // key_of packs 8 bits each
    }
}

std::uint64_t key_of(const std::vector<int>& b) {
    std::uint64_t h = 0;
    for (int x : b) h = (h << 8) | static_cast<std::uint64_t>(x);
    return h;
}

// all b with 0 <= b <= a componentwise and sum(b) = s
void layer_vectors(const std::vector<int>& a, int s,
                   const std::function<void(const std::vector<int>&)>& f) {
    const int k = static_cast<int>(a.size());
    std::vector<int> b(static_cast<size_t>(k), 0);
    std::vector<int> suffix_cap(static_cast<size_t>(k) + 1, 0);
    for (int i = k - 1; i >= 0; --i)
        suffix_cap[static_cast<size_t>(i)] = suffix_cap[static_cast<size_t>(i) + 1] + a[static_cast<size_t>(i)];
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == k) {
            f(b);
            return;
        }
        int hi = std::min(a[static_cast<size_t>(i)], rem);
        int lo = std::max(0, rem - suffix_cap[static_cast<size_t>(i) + 1]);
        for (int v = lo; v <= hi; ++v) {
            b[static_cast<size_t>(i)] = v;
            rec(i + 1, rem - v);
        }
    };
    if (s >= 0 && s <= suffix_cap[0]) rec(0, s);
}

// Traits glue for the two DP value domains (full Laurent polynomial /
// truncated series).
struct PolyOps {
    using Value = LaurentPoly;
    int k;
    Value one() const { return LaurentPoly::one(k); }
    void add_shifted(std::optional<Value>& acc, const Value& src, const std::vector<int>& delta) const {
        ExponentVec e(k);
        for (int i = 0; i < k; ++i) e[i] = delta[static_cast<size_t>(i)];
        Value moved = src.shifted(e);
        if (!acc)
            acc = std::move(moved);
        else
            acc = *acc + moved;
    }
    long long size(const Value& v) const { return static_cast<long long>(v.term_count()); }
};

struct SeriesOps {
    using Value = IntSeries;
    int k;
    std::shared_ptr<const MonomialIndex> index;
    Value one() const { return IntSeries::one(index); }
    void add_shifted(std::optional<Value>& acc, const Value& src, const std::vector<int>& delta) const {
        std::vector<long long> d(delta.begin(), delta.end());
        Value moved = src.mul_binomial(d);
        if (!acc)
            acc = std::move(moved);
        else
            *acc += moved;
    }
    long long size(const Value& v) const { return v.index().size(); }
};

// Layered DP for F. Keeps two graded layers alive; optional harvest callback
// sees every completed entry.
template <class Ops>
typename Ops::Value run_dp(
    const std::vector<int>& a, const Ops& ops, const EngineCaps& caps,
    const std::function<void(const std::vector<int>&, const typename Ops::Value&)>& harvest = {}) {
    using Value = typename Ops::Value;
    const int k = static_cast<int>(a.size());
    const int total = std::accumulate(a.begin(), a.end(), 0);

    std::unordered_map<std::uint64_t, Value> prev, cur;
    std::vector<int> origin(static_cast<size_t>(k), 0);
    prev.emplace(key_of(origin), ops.one());
    if (harvest) harvest(origin, prev.begin()->second);

    std::vector<int> src_b(static_cast<size_t>(k));
    std::vector<int> delta(static_cast<size_t>(k));
    for (int layer = 1; layer <= total; ++layer) {
        cur.clear();
        long long prev_stored = 0;
        for (const auto& [kk, v] : prev) prev_stored += ops.size(v);
        long long stored = prev_stored;
        layer_vectors(a, layer, [&](const std::vector<int>& b) {
            std::optional<Value> acc;
            for (int j = 0; j < k; ++j) {
                if (b[static_cast<size_t>(j)] == 0) continue;
                src_b = b;
                --src_b[static_cast<size_t>(j)];
                const Value& src = prev.at(key_of(src_b));
                std::fill(delta.begin(), delta.end(), 0);
                delta[static_cast<size_t>(j)] += b[static_cast<size_t>((j + 1) % k)];
                delta[static_cast<size_t>((j + k - 1) % k)] -= b[static_cast<size_t>((j + k - 1) % k)];
                ops.add_shifted(acc, src, delta);
            }
            stored += ops.size(*acc);
            if (stored > caps.max_stored_terms)
                throw SizeError("term cap exceeded at layer " + std::to_string(layer) +
                                " (stored " + std::to_string(stored) + " terms)");
            if (harvest) harvest(b, *acc);
            cur.emplace(key_of(b), std::move(*acc));
        });
        prev.swap(cur);
    }
    return std::move(prev.at(key_of(a)));
}

}  // namespace

LaurentPoly compute_F(const std::vector<int>& a, const EngineCaps& caps) {
    check_counts(a);
    return run_dp(a, PolyOps{static_cast<int>(a.size())}, caps);
}

BigInt count_suckers(const std::vector<int>& a, const EngineCaps& caps) {
    if (a.size() < 3) throw DomainError("sucker's bet needs at least 3 decks");
    return compute_F(a, caps).positive_part().eval_all_ones();
}

BigInt count_suckers_reduced(const std::vector<int>& a, const EngineCaps& caps) {
    if (a.empty() || !std::all_of(a.begin(), a.end(), [&](int v) { return v == a[0]; }))
        throw DomainError("reduced count requires equal deck sizes");
    BigInt c = count_suckers(a, caps);
    const int k = static_cast<int>(a.size());
    if (c % k != 0)
        throw InvariantError("sucker count not divisible by k; cyclic orbits should be free");
    return c / k;
}

Rational probability(const std::vector<int>& a, const EngineCaps& caps) {
    return Rational(count_suckers(a, caps), multinomial(a));
}

std::vector<Word> enumerate_suckers_words(const std::vector<int>& a, bool reduce,
                                          const EngineCaps& caps, bool prune) {
    check_counts(a);
    const int k = static_cast<int>(a.size());
    if (k < 3) throw DomainError("sucker's bet needs at least 3 decks");
    if (reduce && !std::all_of(a.begin(), a.end(), [&](int v) { return v == a[0]; }))
        throw DomainError("orbit reduction requires equal deck sizes");
    const int total = std::accumulate(a.begin(), a.end(), 0);

    std::vector<Word> out;
    std::vector<int> letters(static_cast<size_t>(total));
    std::vector<int> used(static_cast<size_t>(k), 0), s(static_cast<size_t>(k), 0);

    std::function<void(int)> rec = [&](int pos) {
        if (pos == total) {
            bool ok = true;
            for (int v : s)
                if (v < 1) {
                    ok = false;
                    break;
                }
            if (!ok) return;
            Word w(letters, k);
            if (reduce && !(canonical_cyclic(w) == w)) return;
            if (static_cast<long long>(out.size()) >= caps.max_listed)
                throw SizeError("listing cap exceeded; use count-only mode");
            out.push_back(std::move(w));
            return;
        }
        if (prune) {
            // admissible cut: best completion for s_i places all remaining
            // (i+1)-letters before remaining i-letters and cannot avoid
            // pairing future (i+1)'s against already-placed i's
            for (int i = 0; i < k; ++i) {
                int ri = a[static_cast<size_t>(i)] - used[static_cast<size_t>(i)];
                int rn = a[static_cast<size_t>((i + 1) % k)] - used[static_cast<size_t>((i + 1) % k)];
                long long best = s[static_cast<size_t>(i)] +
                                 static_cast<long long>(ri) * a[static_cast<size_t>((i + 1) % k)] -
                                 static_cast<long long>(rn) * used[static_cast<size_t>(i)];
                if (best < 1) return;
            }
        }
        for (int j = 0; j < k; ++j) {
            if (used[static_cast<size_t>(j)] == a[static_cast<size_t>(j)]) continue;
            const int jp = (j + 1) % k, jm = (j + k - 1) % k;
            letters[static_cast<size_t>(pos)] = j + 1;
            s[static_cast<size_t>(j)] += used[static_cast<size_t>(jp)];
            s[static_cast<size_t>(jm)] -= used[static_cast<size_t>(jm)];
            ++used[static_cast<size_t>(j)];
            rec(pos + 1);
            --used[static_cast<size_t>(j)];
            s[static_cast<size_t>(jm)] += used[static_cast<size_t>(jm)];
            s[static_cast<size_t>(j)] -= used[static_cast<size_t>(jp)];
        }
    };
    rec(0);
    return out;
}

std::vector<DeckSet> enumerate_suckers(const std::vector<int>& a, bool reduce,
                                       const EngineCaps& caps) {
    std::vector<DeckSet> out;
    for (const Word& w : enumerate_suckers_words(a, reduce, caps)) out.push_back(word_to_decks(w));
    return out;
}

std::vector<BigInt> sequence_equal_decks(int n_max, const EngineCaps& caps) {
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) out.push_back(count_suckers({n, n, n}, caps));
    return out;
}

IntSeries compute_F_series(const std::vector<int>& a, int degree_cap, const EngineCaps& caps) {
    check_counts(a);
    auto index = MonomialIndex::shared(static_cast<int>(a.size()), degree_cap);
    return run_dp(a, SeriesOps{static_cast<int>(a.size()), index}, caps);
}

std::vector<IntSeries> diagonal_F_series(int k, int n_max, int degree_cap,
                                         const EngineCaps& caps) {
    if (k < 2 || k > 8) throw DomainError("deck-size vector length out of range");
    if (n_max < 0) throw DomainError("negative n_max");
    auto index = MonomialIndex::shared(k, degree_cap);
    std::vector<int> a(static_cast<size_t>(k), n_max);
    std::vector<IntSeries> diag(static_cast<size_t>(n_max) + 1, IntSeries(index));
    auto harvest = [&](const std::vector<int>& b, const IntSeries& v) {
        if (std::all_of(b.begin(), b.end(), [&](int x) { return x == b[0]; }))
            diag[static_cast<size_t>(b[0])] = v;
    };
    if (n_max == 0) {
        diag[0] = IntSeries::one(index);
        return diag;
    }
    run_dp(a, SeriesOps{k, index}, caps, harvest);
    return diag;
}

}  // namespace nontrans
