#include "nontrans/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace nontrans {

namespace {

int order_total(const Order3& o) {
    for (int v : o)
        if (v < 0) throw DomainError("negative moment order");
    return o[0] + o[1] + o[2];
}

BigInt word_count(int n) { return multinomial(std::vector<int>{n, n, n}); }

}  // namespace

Rational exact_moment(int n, const Order3& order, const EngineCaps& caps) {
    if (n < 1) throw DomainError("moment requires n >= 1");
    const int total = order_total(order);
    IntSeries f = compute_F_series({n, n, n}, total, caps);
    BigInt num = series_power_moment(f, std::span<const int>(order.data(), 3));
    return Rational(num, word_count(n));
}

std::vector<Rational> moment_sequence(const Order3& order, int n_max, const EngineCaps& caps) {
    if (n_max < 1) throw DomainError("moment requires n >= 1");
    const int total = order_total(order);
    auto diag = diagonal_F_series(3, n_max, total, caps);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        BigInt num = series_power_moment(diag[static_cast<size_t>(n)],
                                         std::span<const int>(order.data(), 3));
        out.emplace_back(num, word_count(n));
    }
    return out;
}

Rational MomentPolynomial::eval(const Rational& n) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
    return acc;
}

std::vector<Rational> MomentPolynomial::descending() const {
    return {coeffs.rbegin(), coeffs.rend()};
}

std::string MomentPolynomial::str() const {
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs[static_cast<size_t>(d)];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        if (d >= 1) out += "*n";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

MomentPolynomial fit_moment_polynomial(const Order3& order, int degree_bound,
                                       const EngineCaps& caps) {
    const int total = order_total(order);
    const int d = degree_bound >= 0 ? degree_bound : (3 * total + 1) / 2 + 2;
    const int holdout = 3;
    const int n_max = d + 1 + holdout;
    std::vector<Rational> values = moment_sequence(order, n_max, caps);

    // Newton divided differences on x = 1..d+1
    const int pts = d + 1;
    std::vector<Rational> dd(values.begin(), values.begin() + pts);
    for (int lvl = 1; lvl < pts; ++lvl)
        for (int i = pts - 1; i >= lvl; --i)
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i) - 1]) / Rational(lvl);

    // expand sum_i dd[i] * prod_{j<i} (n - (j+1)) into monomial coefficients
    std::vector<Rational> coeffs(static_cast<size_t>(pts), Rational(0));
    std::vector<Rational> basis{Rational(1)};  // running product, ascending powers
    for (int i = 0; i < pts; ++i) {
        for (size_t t = 0; t < basis.size(); ++t)
            coeffs[t] += dd[static_cast<size_t>(i)] * basis[t];
        if (i + 1 < pts) {
            // basis *= (n - (i+1))
            basis.push_back(Rational(0));
            for (size_t t = basis.size() - 1; t > 0; --t)
                basis[t] = basis[t - 1] - Rational(i + 1) * basis[t];
            basis[0] = -Rational(i + 1) * basis[0];
        }
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();

    MomentPolynomial poly{order, std::move(coeffs)};
    for (int n = pts + 1; n <= n_max; ++n)
        if (poly.eval(Rational(n)) != values[static_cast<size_t>(n) - 1])
            throw PrecisionError("moment fit failed held-out verification; raise the degree bound");
    return poly;
}

Rational kurtosis(int n, const EngineCaps& caps) {
    auto diag = diagonal_F_series(3, n, 4, caps);
    const IntSeries& f = diag[static_cast<size_t>(n)];
    std::array<int, 3> o4{0, 0, 4}, o2{0, 0, 2};
    Rational m4(series_power_moment(f, std::span<const int>(o4.data(), 3)), word_count(n));
    Rational m2(series_power_moment(f, std::span<const int>(o2.data(), 3)), word_count(n));
    return m4 / (m2 * m2);
}

Rational correlation(int n, const EngineCaps& caps) {
    auto diag = diagonal_F_series(3, n, 2, caps);
    const IntSeries& f = diag[static_cast<size_t>(n)];
    std::array<int, 3> o11{0, 1, 1}, o2{0, 0, 2};
    BigInt m11 = series_power_moment(f, std::span<const int>(o11.data(), 3));
    BigInt m2 = series_power_moment(f, std::span<const int>(o2.data(), 3));
    return Rational(m11, m2);
}

Rational scaled_moment(int n, const Order3& order, const EngineCaps& caps) {
    const int total = order_total(order);
    Rational m = exact_moment(n, order, caps);
    if (total % 2 != 0) {
        if (m != 0)
            throw InvariantError("odd-total moment expected to vanish by reversal antisymmetry");
        return Rational(0);
    }
    Rational sigma2(BigInt(n) * n * (2 * BigInt(n) + 1), 3);
    Rational denom(1);
    for (int i = 0; i < total / 2; ++i) denom *= sigma2;
    return m / denom;
}

namespace {

Rational gaussian_moment_memo(std::array<int, 3> o, const Rational& r,
                              std::map<std::array<int, 3>, Rational>& memo) {
    std::sort(o.begin(), o.end());
    if (o[0] < 0) return Rational(0);
    if (o[0] + o[1] + o[2] == 0) return Rational(1);
    auto it = memo.find(o);
    if (it != memo.end()) return it->second;
    // reduce on the largest component: E[x^a y^b z^c] with a = o[2]
    const int a = o[2], b = o[1], c = o[0];
    Rational val = Rational(a - 1) * gaussian_moment_memo({a - 2, b, c}, r, memo);
    if (b > 0) val += Rational(b) * r * gaussian_moment_memo({a - 1, b - 1, c}, r, memo);
    if (c > 0) val += Rational(c) * r * gaussian_moment_memo({a - 1, b, c - 1}, r, memo);
    memo.emplace(o, val);
    return val;
}

}  // namespace

Rational gaussian_moment(const Order3& order, const Rational& r) {
    const int total = order_total(order);
    if (total % 2 != 0) return Rational(0);
    std::map<std::array<int, 3>, Rational> memo;
    return gaussian_moment_memo(order, r, memo);
}

Rational gaussian_moment_by_matching(const Order3& order, const Rational& r) {
    const int total = order_total(order);
    if (total % 2 != 0) return Rational(0);
    if (total > 16) throw SizeError("matching oracle limited to total order 16");
    std::vector<int> labels;
    for (int coord = 0; coord < 3; ++coord)
        labels.insert(labels.end(), static_cast<size_t>(order[static_cast<size_t>(coord)]), coord);

    std::function<Rational(std::vector<int>&)> rec = [&](std::vector<int>& rest) -> Rational {
        if (rest.empty()) return Rational(1);
        Rational acc(0);
        std::vector<int> next(rest.begin() + 1, rest.end());
        for (size_t i = 0; i + 1 < rest.size(); ++i) {
            std::swap(next[i], next[0]);  // partner moved out below
            std::vector<int> sub(next.begin() + 1, next.end());
            Rational w = (rest[0] == next[0]) ? Rational(1) : r;
            acc += w * rec(sub);
            std::swap(next[i], next[0]);
        }
        return acc;
    };
    return rec(labels);
}

Rational gaussian_scaled_limit(const Order3& order) {
    return gaussian_moment(order, Rational(-1, 2));
}

Rational diagonal_closed_form(int n) {
    if (n < 0) throw DomainError("diagonal closed form requires n >= 0");
    BigInt num = factorial(static_cast<unsigned>(3 * n)) * factorial(static_cast<unsigned>(2 * n));
    BigInt den = factorial(static_cast<unsigned>(n));
    den *= den;
    BigInt eight(1);
    for (int i = 0; i < n; ++i) eight *= 8;
    return Rational(num, den * eight);
}

double NormalizationConstant::value() const {
    const double two_pi = 2.0 * std::acos(-1.0);
    return to_double(coefficient) * std::pow(two_pi, two_pi_half_power / 2.0) /
           std::sqrt(to_double(radicand));
}

NormalizationConstant normalization_constant(const Rational& c) {
    if (!(c > Rational(-1, 2) && c < 1))
        throw DomainError("normalization constant defined for -1/2 < c < 1");
    return {Rational(1) / (Rational(1) - c), 3, Rational(1) + 2 * c};
}

namespace {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<size_t>(n), 0.0);
    w.assign(static_cast<size_t>(n), 0.0);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0, z1 = 0.0;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > 1e-15);
        x[static_cast<size_t>(i)] = -z;
        x[static_cast<size_t>(n - 1 - i)] = z;
        w[static_cast<size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<size_t>(n - 1 - i)] = w[static_cast<size_t>(i)];
    }
}

}  // namespace

double gaussian_density_integral(double c, int nodes, double L) {
    if (nodes < 2 || L <= 0) throw DomainError("bad quadrature parameters");
    std::vector<double> x, w;
    gauss_legendre(nodes, x, w);
    for (int i = 0; i < nodes; ++i) {
        x[static_cast<size_t>(i)] *= L;
        w[static_cast<size_t>(i)] *= L;
    }
    std::vector<double> g(static_cast<size_t>(nodes));
    for (int i = 0; i < nodes; ++i)
        g[static_cast<size_t>(i)] =
            w[static_cast<size_t>(i)] * std::exp(-0.5 * x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)]);
    double total = 0.0;
    for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < nodes; ++j) {
            const double xij = x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
            const double gij = g[static_cast<size_t>(i)] * g[static_cast<size_t>(j)];
            for (int l = 0; l < nodes; ++l) {
                const double cross =
                    xij + (x[static_cast<size_t>(i)] + x[static_cast<size_t>(j)]) * x[static_cast<size_t>(l)];
                total += gij * g[static_cast<size_t>(l)] * std::exp(-c * cross);
            }
        }
    return total;
}

MonteCarloEstimate sample_gaussian_moment(const Order3& order, std::size_t draws,
                                          std::uint64_t seed) {
    if (draws == 0) throw DomainError("at least one draw required");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = std::sqrt(1.5);
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t it = 0; it < draws; ++it) {
        double z1 = normal(rng), z2 = normal(rng), z3 = normal(rng);
        double m = (z1 + z2 + z3) / 3.0;
        double x = scale * (z1 - m), y = scale * (z2 - m), z = scale * (z3 - m);
        double term = 1.0;
        for (int i = 0; i < order[0]; ++i) term *= x;
        for (int i = 0; i < order[1]; ++i) term *= y;
        for (int i = 0; i < order[2]; ++i) term *= z;
        sum += term;
        sumsq += term * term;
    }
    const double n = static_cast<double>(draws);
    const double mean = sum / n;
    const double var = std::max(0.0, sumsq / n - mean * mean);
    return {mean, std::sqrt(var / n)};
}

}  // namespace nontrans
