#pragma once

#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "nontrans/numeric.hpp"

namespace nontrans {

// Rank table for monomials p_1^{a_1} ... p_k^{a_k} with a_i >= 0 and
// total degree <= D, ordered graded-lex. Shared by every series of the
// same shape so coefficient stores can be flat vectors.
class MonomialIndex {
public:
    MonomialIndex(int k, int degree_cap);

    int vars() const { return k_; }
    int degree_cap() const { return cap_; }
    int size() const { return static_cast<int>(degrees_.size()); }

    std::span<const int> monomial(int rank) const;
    int total_degree(int rank) const { return degrees_[static_cast<size_t>(rank)]; }
    int rank_of(std::span<const int> alpha) const;  // -1 if absent

    // Rank of monomial(rank) - e_axis, or -1 when the entry is already 0.
    int predecessor(int rank, int axis) const {
        return pred_[static_cast<size_t>(axis)][static_cast<size_t>(rank)];
    }

    static std::shared_ptr<const MonomialIndex> shared(int k, int degree_cap);

private:
    std::uint64_t key(std::span<const int> alpha) const;
    int k_, cap_;
    std::vector<int> flat_;  // k_ entries per monomial
    std::vector<int> degrees_;
    std::vector<std::vector<int>> pred_;
    std::unordered_map<std::uint64_t, int> rank_;
};

// Power series in the shift variables p_i = q_i - 1, truncated past total
// degree D. Coefficient domain is a template parameter: the public
// TruncatedSeries uses exact rationals, the engine's hot path exact integers.
template <class Coeff>
class SeriesData {
public:
    explicit SeriesData(std::shared_ptr<const MonomialIndex> index)
        : index_(std::move(index)), coeffs_(static_cast<size_t>(index_->size())) {}

    static SeriesData one(std::shared_ptr<const MonomialIndex> index) {
        SeriesData s(std::move(index));
        s.coeffs_[0] = 1;
        return s;
    }

    const MonomialIndex& index() const { return *index_; }
    std::shared_ptr<const MonomialIndex> index_ptr() const { return index_; }
    int vars() const { return index_->vars(); }
    int degree_cap() const { return index_->degree_cap(); }

    const Coeff& coeff_at_rank(int r) const { return coeffs_[static_cast<size_t>(r)]; }
    Coeff& coeff_at_rank(int r) { return coeffs_[static_cast<size_t>(r)]; }
    Coeff coeff(std::span<const int> alpha) const {
        int r = index_->rank_of(alpha);
        return r < 0 ? Coeff(0) : coeffs_[static_cast<size_t>(r)];
    }

    SeriesData& operator+=(const SeriesData& o) {
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    // Multiply by (1 + p_axis)^d truncated, d of either sign.
    // out[alpha] = sum_j C(d, j) * in[alpha - j*e_axis].
    SeriesData mul_univariate_binomial(int axis, long long d) const {
        const int n = index_->size();
        const int cap = index_->degree_cap();
        std::vector<BigInt> binom(static_cast<size_t>(cap) + 1);
        for (int j = 0; j <= cap; ++j) binom[static_cast<size_t>(j)] = binomial(d, static_cast<unsigned>(j));
        SeriesData out(index_);
        for (int r = 0; r < n; ++r) {
            Coeff acc(0);
            int src = r;
            for (int j = 0; src >= 0; ++j, src = index_->predecessor(src, axis)) {
                const Coeff& c = coeffs_[static_cast<size_t>(src)];
                if (!(c == 0)) acc += c * Coeff(binom[static_cast<size_t>(j)]);
            }
            out.coeffs_[static_cast<size_t>(r)] = std::move(acc);
        }
        return out;
    }

    // Multiply by prod_t (1 + p_t)^{delta_t} truncated.
    SeriesData mul_binomial(std::span<const long long> delta) const {
        if (static_cast<int>(delta.size()) != vars())
            throw DomainError("series shift dimension mismatch");
        SeriesData cur = *this;
        for (int t = 0; t < vars(); ++t)
            if (delta[static_cast<size_t>(t)] != 0)
                cur = cur.mul_univariate_binomial(t, delta[static_cast<size_t>(t)]);
        return cur;
    }

    bool operator==(const SeriesData& o) const { return coeffs_ == o.coeffs_; }

private:
    std::shared_ptr<const MonomialIndex> index_;
    std::vector<Coeff> coeffs_;
};

using TruncatedSeries = SeriesData<Rational>;
using IntSeries = SeriesData<BigInt>;

TruncatedSeries to_rational_series(const IntSeries& s);

// Power moment sum_w prod_t s_t(w)^{order_t} from the series of
// F(a)(1+p_1,...,1+p_k): the series coefficients are the binomial
// (factorial-type) moments sum_w prod C(s_t, alpha_t), and
// x^i = sum_j S2(i,j) j! C(x,j) converts them. Exact; integral for
// integer-coefficient series. Throws PrecisionError when the truncation
// cap cannot support the requested order.
Rational series_power_moment(const TruncatedSeries& s, std::span<const int> order);
BigInt series_power_moment(const IntSeries& s, std::span<const int> order);

}  // namespace nontrans
