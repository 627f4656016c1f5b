#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <vector>

#include "nontrans/engine.hpp"
#include "nontrans/series.hpp"

using namespace nontrans;

TEST_CASE("monomial index ranks graded-lex with working predecessors") {
    auto idx = MonomialIndex::shared(3, 4);
    CHECK(idx->size() == 35);  // C(4+3,3)
    CHECK(idx->monomial(0)[0] == 0);
    CHECK(idx->total_degree(0) == 0);
    for (int r = 0; r < idx->size(); ++r) {
        CHECK(idx->rank_of(idx->monomial(r)) == r);
        if (r > 0) CHECK(idx->total_degree(r - 1) <= idx->total_degree(r));
        for (int axis = 0; axis < 3; ++axis) {
            int p = idx->predecessor(r, axis);
            auto mono = idx->monomial(r);
            if (mono[static_cast<size_t>(axis)] == 0) {
                CHECK(p == -1);
            } else {
                REQUIRE(p >= 0);
                auto prev = idx->monomial(p);
                for (int t = 0; t < 3; ++t) {
                    int expect = mono[static_cast<size_t>(t)] - (t == axis ? 1 : 0);
                    CHECK(prev[static_cast<size_t>(t)] == expect);
                }
            }
        }
    }
    // the shared cache hands out one instance per shape
    CHECK(idx.get() == MonomialIndex::shared(3, 4).get());
    CHECK(idx.get() != MonomialIndex::shared(3, 5).get());
}

TEST_CASE("binomial multiplication matches hand expansion") {
    auto idx = MonomialIndex::shared(3, 2);
    auto one = IntSeries::one(idx);

    std::vector<long long> up{1, 0, 0};
    auto a = one.mul_binomial(up);  // (1+p1) exactly
    CHECK(a.coeff(std::array{0, 0, 0}) == 1);
    CHECK(a.coeff(std::array{1, 0, 0}) == 1);
    CHECK(a.coeff(std::array{2, 0, 0}) == 0);
    CHECK(a.coeff(std::array{0, 1, 0}) == 0);

    std::vector<long long> down{-1, 0, 0};
    auto b = one.mul_binomial(down);  // 1 - p1 + p1^2 - ...
    CHECK(b.coeff(std::array{0, 0, 0}) == 1);
    CHECK(b.coeff(std::array{1, 0, 0}) == -1);
    CHECK(b.coeff(std::array{2, 0, 0}) == 1);

    std::vector<long long> none{0, 0, 0};
    CHECK(one.mul_binomial(none) == one);

    // (1+p1) times its inverse cancels exactly
    auto c = a.mul_binomial(down);
    CHECK(c == one);
}

TEST_CASE("shift composition adds exponents") {
    auto idx = MonomialIndex::shared(3, 5);
    auto s = IntSeries::one(idx);
    std::vector<long long> d1{2, -1, 0}, d2{-3, 4, 1}, sum{-1, 3, 1};
    CHECK(s.mul_binomial(d1).mul_binomial(d2) == s.mul_binomial(sum));
}

TEST_CASE("rational view preserves coefficients") {
    auto idx = MonomialIndex::shared(2, 3);
    std::vector<long long> d{-2, 1};
    auto s = IntSeries::one(idx).mul_binomial(d);
    auto r = to_rational_series(s);
    for (int rank = 0; rank < idx->size(); ++rank)
        CHECK(r.coeff_at_rank(rank) == Rational(s.coeff_at_rank(rank)));
}

TEST_CASE("series power moments equal full-enumerator power sums") {
    // All k=3 multiplicity vectors with component sum <= 9, all orders with
    // component sum <= 6: the truncated-series route and the exact Laurent
    // route must agree term for term.
    const int max_sum = 9, max_order = 6;
    std::vector<std::array<int, 3>> orders;
    for (int i = 0; i <= max_order; ++i)
        for (int j = 0; i + j <= max_order; ++j)
            for (int l = 0; i + j + l <= max_order; ++l) orders.push_back({i, j, l});

    long long compared = 0;
    for (int a1 = 0; a1 <= max_sum; ++a1)
        for (int a2 = 0; a1 + a2 <= max_sum; ++a2)
            for (int a3 = 0; a1 + a2 + a3 <= max_sum; ++a3) {
                std::vector<int> a{a1, a2, a3};
                LaurentPoly f = compute_F(a);
                IntSeries s = compute_F_series(a, max_order);
                for (const auto& ord : orders) {
                    std::vector<int> o(ord.begin(), ord.end());
                    CHECK(series_power_moment(s, o) == f.power_sum(o));
                    ++compared;
                }
            }
    CHECK(compared == 220 * 84);
}

TEST_CASE("order past the truncation cap is refused") {
    auto s = compute_F_series({2, 2, 2}, 2);
    std::vector<int> ok{0, 1, 1}, over{0, 0, 4};
    CHECK(series_power_moment(s, ok) == compute_F({2, 2, 2}).power_sum(ok));
    CHECK_THROWS_AS((void)series_power_moment(s, over), PrecisionError);
}
