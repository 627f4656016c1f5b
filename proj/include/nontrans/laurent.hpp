#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nontrans/numeric.hpp"

namespace nontrans {

// Exponent vector of a Laurent monomial q_1^{e_1} ... q_k^{e_k}.
// Inline storage; k is capped so terms stay flat and cheap to move.
class ExponentVec {
public:
    static constexpr int max_vars = 8;

    ExponentVec() = default;
    explicit ExponentVec(int k) : k_(static_cast<std::uint8_t>(check_k(k))) {}
    ExponentVec(std::initializer_list<int> e);
    explicit ExponentVec(std::span<const int> e);

    int vars() const { return k_; }
    std::int32_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    std::int32_t& operator[](int i) { return e_[static_cast<size_t>(i)]; }

    long long total_degree() const;
    bool all_strictly_positive() const;
    ExponentVec negated() const;
    ExponentVec rotated(int by) const;  // e'_i = e_{(i-by) mod k}

    friend ExponentVec operator+(const ExponentVec& a, const ExponentVec& b);
    friend bool operator==(const ExponentVec& a, const ExponentVec& b);

    // Graded-lexicographic: total degree first, then lexicographic.
    friend std::strong_ordering operator<=>(const ExponentVec& a, const ExponentVec& b);

private:
    static int check_k(int k);
    std::array<std::int32_t, max_vars> e_{};
    std::uint8_t k_ = 0;
};

struct Term {
    ExponentVec exp;
    BigInt coeff;
};

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// Terms are kept sorted in graded-lex order and never hold a zero coefficient.
class LaurentPoly {
public:
    explicit LaurentPoly(int k) : k_(k) { (void)ExponentVec(k); }
    static LaurentPoly one(int k);
    static LaurentPoly monomial(const ExponentVec& e, BigInt coeff);

    // Sorted, deduplicated construction from arbitrary term order.
    static LaurentPoly from_terms(int k, std::vector<Term> terms);

    int vars() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    // Termwise sum; zero coefficients dropped.
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);

    // Multiply by c * q^delta. Sorted order is translation invariant, so this
    // is a single pass.
    LaurentPoly shifted(const ExponentVec& delta, const BigInt& c = BigInt(1)) const;

    // Sum of all coefficients, i.e. value at q_1 = ... = q_k = 1.
    BigInt eval_all_ones() const;

    // Keep exactly the terms whose exponents are all >= 1.
    LaurentPoly positive_part() const;

    // Sum over terms of coeff * prod_t exp_t^{order_t}, with 0^0 = 1.
    BigInt power_sum(std::span<const int> order) const;

    // Exponent-negated polynomial (q -> 1/q).
    LaurentPoly reciprocal_substitution() const;

    // Simultaneous cyclic shift of the variables: q_i -> q_{i+by}.
    LaurentPoly variables_rotated(int by) const;

    // One term per line, "coeff e1 e2 ... ek", graded-lex ascending.
    std::string serialize() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    int k_;
    std::vector<Term> terms_;
};

}  // namespace nontrans
