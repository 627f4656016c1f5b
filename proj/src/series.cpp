#include "nontrans/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace nontrans {

namespace {

void gen_monomials(int k, int cap, std::vector<int>& flat, std::vector<int>& degs) {
    // graded-lex: by total degree, then lexicographically ascending
    std::vector<int> cur(static_cast<size_t>(k));
    for (int d = 0; d <= cap; ++d) {
        // enumerate compositions of d into k parts, lex ascending
        std::fill(cur.begin(), cur.end(), 0);
        cur[static_cast<size_t>(k) - 1] = d;
        for (;;) {
            flat.insert(flat.end(), cur.begin(), cur.end());
            degs.push_back(d);
            // next composition in lex order: find rightmost index < k-1 that can
            // be incremented by moving mass from the tail
            int i = k - 2;
            while (i >= 0) {
                int tail = 0;
                for (int j = i + 1; j < k; ++j) tail += cur[static_cast<size_t>(j)];
                if (tail > 0) break;
                --i;
            }
            if (i < 0) break;
            ++cur[static_cast<size_t>(i)];
            int rest = 0;
            for (int j = i + 1; j < k; ++j) {
                rest += cur[static_cast<size_t>(j)];
                cur[static_cast<size_t>(j)] = 0;
            }
            cur[static_cast<size_t>(k) - 1] = rest - 1;
        }
    }
}

}  // namespace

MonomialIndex::MonomialIndex(int k, int degree_cap) : k_(k), cap_(degree_cap) {
    if (k < 1 || k > 8) throw DomainError("MonomialIndex: variable count out of range");
    if (degree_cap < 0) throw DomainError("MonomialIndex: negative degree cap");
    gen_monomials(k_, cap_, flat_, degrees_);
    const int n = size();
    rank_.reserve(static_cast<size_t>(n) * 2);
    for (int r = 0; r < n; ++r) rank_.emplace(key(monomial(r)), r);
    pred_.assign(static_cast<size_t>(k_), std::vector<int>(static_cast<size_t>(n), -1));
    std::vector<int> tmp(static_cast<size_t>(k_));
    for (int r = 0; r < n; ++r) {
        auto m = monomial(r);
        for (int ax = 0; ax < k_; ++ax) {
            if (m[static_cast<size_t>(ax)] == 0) continue;
            std::copy(m.begin(), m.end(), tmp.begin());
            --tmp[static_cast<size_t>(ax)];
            pred_[static_cast<size_t>(ax)][static_cast<size_t>(r)] = rank_of(tmp);
        }
    }
}

std::span<const int> MonomialIndex::monomial(int rank) const {
    return {flat_.data() + static_cast<size_t>(rank) * static_cast<size_t>(k_),
            static_cast<size_t>(k_)};
}

std::uint64_t MonomialIndex::key(std::span<const int> alpha) const {
    // degrees are <= cap_ <= 255 in practice; pack 8 bytes
    std::uint64_t h = 0;
    for (int i = 0; i < k_; ++i) h = (h << 8) | static_cast<std::uint64_t>(alpha[static_cast<size_t>(i)] & 0xff);
    return h;
}

int MonomialIndex::rank_of(std::span<const int> alpha) const {
    if (static_cast<int>(alpha.size()) != k_) return -1;
    int total = 0;
    for (int i = 0; i < k_; ++i) {
        if (alpha[static_cast<size_t>(i)] < 0) return -1;
        total += alpha[static_cast<size_t>(i)];
    }
    if (total > cap_) return -1;
    auto it = rank_.find(key(alpha));
    return it == rank_.end() ? -1 : it->second;
}

std::shared_ptr<const MonomialIndex> MonomialIndex::shared(int k, int degree_cap) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::weak_ptr<const MonomialIndex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{k, degree_cap}];
    if (auto p = slot.lock()) return p;
    auto p = std::make_shared<const MonomialIndex>(k, degree_cap);
    slot = p;
    return p;
}

TruncatedSeries to_rational_series(const IntSeries& s) {
    TruncatedSeries out(s.index_ptr());
    for (int r = 0; r < s.index().size(); ++r)
        out.coeff_at_rank(r) = Rational(s.coeff_at_rank(r));
    return out;
}

namespace {

template <class Coeff>
Coeff power_moment_impl(const SeriesData<Coeff>& s, std::span<const int> order) {
    const int k = s.vars();
    if (static_cast<int>(order.size()) != k) throw DomainError("moment order dimension mismatch");
    int total = 0;
    for (int t = 0; t < k; ++t) {
        if (order[static_cast<size_t>(t)] < 0) throw DomainError("negative moment order");
        total += order[static_cast<size_t>(t)];
    }
    if (total > s.degree_cap())
        throw PrecisionError("series truncation cap too small for requested moment order");

    // weight_t[j] = S2(i_t, j) * j!  so that x^{i_t} = sum_j weight_t[j] C(x, j)
    std::vector<std::vector<BigInt>> weight(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) {
        const unsigned i = static_cast<unsigned>(order[static_cast<size_t>(t)]);
        auto& w = weight[static_cast<size_t>(t)];
        w.resize(i + 1);
        for (unsigned j = 0; j <= i; ++j) w[j] = stirling2(i, j) * factorial(j);
    }

    Coeff acc(0);
    std::vector<int> alpha(static_cast<size_t>(k), 0);
    // iterate over alpha with alpha_t <= order_t
    for (;;) {
        BigInt w = 1;
        for (int t = 0; t < k; ++t)
            w *= weight[static_cast<size_t>(t)][static_cast<size_t>(alpha[static_cast<size_t>(t)])];
        if (!(w == 0)) {
            int r = s.index().rank_of(alpha);
            if (r >= 0) acc += s.coeff_at_rank(r) * Coeff(w);
        }
        int t = k - 1;
        while (t >= 0 && alpha[static_cast<size_t>(t)] == order[static_cast<size_t>(t)]) {
            alpha[static_cast<size_t>(t)] = 0;
            --t;
        }
        if (t < 0) break;
        ++alpha[static_cast<size_t>(t)];
    }
    return acc;
}

}  // namespace

Rational series_power_moment(const TruncatedSeries& s, std::span<const int> order) {
    return power_moment_impl(s, order);
}

BigInt series_power_moment(const IntSeries& s, std::span<const int> order) {
    return power_moment_impl(s, order);
}

}  // namespace nontrans
