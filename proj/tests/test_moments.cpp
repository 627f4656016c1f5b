#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "nontrans/moments.hpp"
#include "nontrans/words.hpp"

using namespace nontrans;

namespace {

// independent oracle: average prod s_t^{i_t} over all words by enumeration
Rational moment_by_enumeration(int n, const Order3& order) {
    std::vector<int> a{n, n, n};
    BigInt num = 0;
    BigInt words = 0;
    for (const Word& w : all_words(a)) {
        auto s = stats(w);
        BigInt prod = 1;
        for (int t = 0; t < 3; ++t)
            for (int rep = 0; rep < order[static_cast<size_t>(t)]; ++rep)
                prod *= s[static_cast<size_t>(t)];
        num += prod;
        ++words;
    }
    return Rational(num, words);
}

}  // namespace

TEST_CASE("exact moments at small sizes") {
    CHECK(exact_moment(2, {0, 0, 2}) == Rational(20, 3));
    CHECK(exact_moment(2, {0, 1, 1}) == Rational(-8, 3));
    CHECK(exact_moment(1, {0, 0, 2}) == 1);
    CHECK(exact_moment(1, {0, 1, 1}) == Rational(-1, 3));
    CHECK(exact_moment(3, {0, 0, 0}) == 1);
    // odd total orders vanish by reversal symmetry
    CHECK(exact_moment(3, {0, 0, 1}) == 0);
    CHECK(exact_moment(2, {1, 1, 1}) == 0);
    CHECK(exact_moment(2, {0, 1, 2}) == 0);
    // cyclic symmetry of the three statistics
    CHECK(exact_moment(3, {0, 1, 1}) == exact_moment(3, {1, 1, 0}));
    CHECK(exact_moment(3, {0, 1, 1}) == exact_moment(3, {1, 0, 1}));
    CHECK(exact_moment(3, {0, 0, 2}) == exact_moment(3, {2, 0, 0}));
}

TEST_CASE("exact moments match direct enumeration") {
    for (int n = 1; n <= 2; ++n) {
        for (Order3 o : {Order3{0, 0, 2}, Order3{0, 1, 1}, Order3{0, 0, 4},
                         Order3{1, 1, 2}, Order3{0, 2, 2}, Order3{2, 2, 2}}) {
            CHECK(exact_moment(n, o) == moment_by_enumeration(n, o));
        }
    }
}

TEST_CASE("moment sequences come from one sweep") {
    auto seq = moment_sequence({0, 0, 2}, 6);
    REQUIRE(seq.size() == 6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(seq[static_cast<size_t>(n - 1)] == exact_moment(n, {0, 0, 2}));
        CHECK(seq[static_cast<size_t>(n - 1)] == Rational(n * n * (2 * n + 1), 3));
    }
}

TEST_CASE("variance and covariance fits") {
    MomentPolynomial var = fit_moment_polynomial({0, 0, 2});
    CHECK(var.coeffs == std::vector<Rational>{0, 0, Rational(1, 3), Rational(2, 3)});
    CHECK(var.degree() == 3);
    CHECK(var.eval(5) == Rational(25 * 11, 3));

    MomentPolynomial cov = fit_moment_polynomial({0, 1, 1});
    CHECK(cov.coeffs == std::vector<Rational>{0, 0, 0, Rational(-1, 3)});
    CHECK(cov.str() == "(-1/3)*n^3");
    CHECK(cov.descending() ==
          std::vector<Rational>{Rational(-1, 3), 0, 0, 0});

    // degree bound too small for the data
    CHECK_THROWS_AS((void)fit_moment_polynomial({0, 0, 2}, 1), PrecisionError);
}

TEST_CASE("kurtosis and correlation closed forms") {
    CHECK(kurtosis(1) == 1);
    CHECK(kurtosis(2) == Rational(51, 25));
    for (int n = 1; n <= 4; ++n) {
        CHECK(kurtosis(n) ==
              Rational(3 * (10 * n * n - n - 4), 5 * n * (2 * n + 1)));
        CHECK(correlation(n) == Rational(-n, 2 * n + 1));
    }
    // fourth moment approaches the Gaussian value 3 from below
    Rational k12 = kurtosis(12);
    CHECK(k12 < 3);
    CHECK(k12 > Rational(14, 5));
    CHECK(k12 > kurtosis(6));
}

TEST_CASE("scaled moments") {
    CHECK(scaled_moment(2, {0, 0, 2}) == 1);
    CHECK(scaled_moment(5, {0, 0, 2}) == 1);
    CHECK(scaled_moment(2, {0, 1, 1}) == Rational(-2, 5));
    CHECK(scaled_moment(3, {1, 1, 1}) == 0);
    CHECK(scaled_moment(2, {0, 0, 4}) == kurtosis(2));
}

TEST_CASE("gaussian moments by recursion equal matching enumeration") {
    for (const Rational& r : {Rational(-1, 2), Rational(1, 3), Rational(0)}) {
        for (int i = 0; i <= 8; ++i)
            for (int j = i; i + j <= 8; ++j)
                for (int l = j; i + j + l <= 8; ++l) {
                    Order3 o{i, j, l};
                    CHECK(gaussian_moment(o, r) == gaussian_moment_by_matching(o, r));
                }
    }
    // permutation invariance
    CHECK(gaussian_moment({1, 2, 3}, Rational(1, 5)) ==
          gaussian_moment({3, 1, 2}, Rational(1, 5)));
    // odd totals vanish
    CHECK(gaussian_moment({0, 0, 3}, Rational(1, 4)) == 0);
    CHECK(gaussian_moment({1, 1, 1}, Rational(1, 4)) == 0);
}

TEST_CASE("scaled limits at the degenerate correlation") {
    CHECK(gaussian_scaled_limit({0, 0, 0}) == 1);
    CHECK(gaussian_scaled_limit({0, 0, 2}) == 1);
    CHECK(gaussian_scaled_limit({0, 1, 1}) == Rational(-1, 2));
    CHECK(gaussian_scaled_limit({0, 0, 4}) == 3);
    CHECK(gaussian_scaled_limit({1, 1, 2}) == 0);
    CHECK(gaussian_scaled_limit({2, 2, 2}) == Rational(3, 2));
    CHECK(gaussian_scaled_limit({4, 5, 5}) == Rational(-945, 4));
}

TEST_CASE("finite scaled moments drift toward the limits") {
    // covariance: -n/(2n+1) -> -1/2
    Rational s = scaled_moment(30, {0, 1, 1});
    CHECK(to_double(s - Rational(-1, 2)) < 0.01);
    CHECK(to_double(s - Rational(-1, 2)) > 0.0);
}

TEST_CASE("diagonal closed form") {
    CHECK(diagonal_closed_form(0) == 1);
    CHECK(diagonal_closed_form(1) == Rational(3, 2));
    CHECK(diagonal_closed_form(2) == Rational(135, 2));
    CHECK(diagonal_closed_form(3) == 14175);
    for (int n = 0; n <= 3; ++n) {
        CHECK(gaussian_scaled_limit({2 * n, 2 * n, 2 * n}) == diagonal_closed_form(n));
    }
}

TEST_CASE("normalization constant of the limiting density") {
    NormalizationConstant at0 = normalization_constant(0);
    CHECK(at0.coefficient == 1);
    CHECK(at0.radicand == 1);
    CHECK(at0.two_pi_half_power == 3);
    CHECK(at0.value() == doctest::Approx(std::pow(2 * M_PI, 1.5)).epsilon(1e-12));

    NormalizationConstant quarter = normalization_constant(Rational(1, 4));
    CHECK(quarter.coefficient == Rational(4, 3));
    CHECK(quarter.radicand == Rational(3, 2));

    NormalizationConstant half = normalization_constant(Rational(1, 2));
    CHECK(half.coefficient == 2);
    CHECK(half.radicand == 2);

    CHECK_THROWS_AS((void)normalization_constant(Rational(-1, 2)), DomainError);
    CHECK_THROWS_AS((void)normalization_constant(1), DomainError);
    CHECK_THROWS_AS((void)normalization_constant(Rational(6, 5)), DomainError);
}

TEST_CASE("quadrature reproduces the closed-form mass") {
    for (double c : {0.0, 0.25, 0.5}) {
        double closed = normalization_constant(Rational(static_cast<int>(c * 4), 4)).value();
        double quad = gaussian_density_integral(c);
        CHECK(std::abs(closed - quad) < 1e-9);
    }
}

TEST_CASE("monte carlo sampling brackets the exact limits") {
    for (Order3 o : {Order3{0, 0, 2}, Order3{0, 1, 1}, Order3{2, 2, 2}, Order3{0, 0, 4}}) {
        MonteCarloEstimate est = sample_gaussian_moment(o, 400'000);
        double exact = to_double(gaussian_scaled_limit(o));
        CHECK(est.std_error > 0.0);
        CHECK(std::abs(est.mean - exact) < 5.0 * est.std_error + 1e-3);
    }
}
