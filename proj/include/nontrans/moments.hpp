#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nontrans/engine.hpp"
#include "nontrans/numeric.hpp"

namespace nontrans {

using Order3 = std::array<int, 3>;

// E[s_1^{i1} s_2^{i2} s_3^{i3}] over W(n,n,n), exact.
Rational exact_moment(int n, const Order3& order, const EngineCaps& caps = {});

// moments for n = 1..n_max out of a single diagonal DP sweep
std::vector<Rational> moment_sequence(const Order3& order, int n_max,
                                      const EngineCaps& caps = {});

// Polynomial in n with exact rational coefficients, ascending powers.
struct MomentPolynomial {
    Order3 order{};
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational eval(const Rational& n) const;
    std::vector<Rational> descending() const;
    std::string str() const;  // e.g. "(-1/3)*n^3"
    bool operator==(const MomentPolynomial&) const = default;
};

// Exact interpolation of n -> exact_moment(n, order) through
// n = 1..degree_bound+1, cross-checked at 3 held-out points.
// degree_bound < 0 selects ceil(3*total/2) + 2.
MomentPolynomial fit_moment_polynomial(const Order3& order, int degree_bound = -1,
                                       const EngineCaps& caps = {});

Rational kurtosis(int n, const EngineCaps& caps = {});     // M(0,0,4)/M(0,0,2)^2
Rational correlation(int n, const EngineCaps& caps = {});  // M(0,1,1)/M(0,0,2)

// exact_moment / sigma^total with sigma^2 = n^2(2n+1)/3; odd totals are
// exactly zero, so the value is always rational.
Rational scaled_moment(int n, const Order3& order, const EngineCaps& caps = {});

// Moments of a centered Gaussian vector with unit variances and common
// pairwise correlation r, by the pairing (Isserlis) recursion.
Rational gaussian_moment(const Order3& order, const Rational& r);

// Same value by explicit perfect-matching enumeration (oracle; total <= 16).
Rational gaussian_moment_by_matching(const Order3& order, const Rational& r);

// The n -> infinity limit of scaled_moment: gaussian_moment at r = -1/2.
Rational gaussian_scaled_limit(const Order3& order);

// (3n)!(2n)!/(8^n (n!)^2), the diagonal limit S(2n,2n,2n).
Rational diagonal_closed_form(int n);

// (2pi)^{3/2} * coefficient / sqrt(radicand): the mass of
// exp(-x^2/2 - y^2/2 - z^2/2 - c(xy+xz+yz)).
struct NormalizationConstant {
    Rational coefficient;   // 1/(1-c)
    int two_pi_half_power;  // exponent numerator over 2 of the (2pi) factor
    Rational radicand;      // 1+2c
    double value() const;
};
NormalizationConstant normalization_constant(const Rational& c);

// Gauss-Legendre quadrature of the same density over [-L, L]^3.
double gaussian_density_integral(double c, int nodes = 96, double L = 14.0);

// Monte Carlo moment estimate at the degenerate r = -1/2 limit
// (x = sqrt(3/2) * (z - mean(z)) for z standard normal); fixed seed.
struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};
MonteCarloEstimate sample_gaussian_moment(const Order3& order, std::size_t draws,
                                          std::uint64_t seed = 0x5eed5eed5eedULL);

}  // namespace nontrans
