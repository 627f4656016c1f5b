#include "nontrans/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "nontrans/dice.hpp"
#include "nontrans/moments.hpp"
#include "nontrans/verify.hpp"
#include "nontrans/words.hpp"

namespace nontrans {

namespace {

// ---- reference values -------------------------------------------------

// counts of sucker's-bet deck triples at n = 1..12; the default gate stops
// at n = 7 to stay fast, the extended tier recomputes the whole table
const std::vector<long long> kCounts{0,       0,        15,        39,
                                     5196,    32115,    2093199,   19618353,
                                     960165789, 11272949151LL, 479538890271LL, 6504453085104LL};
const std::vector<long long> kReduced{0,      0,        5,         13,
                                      1732,   10705,    697733,    6539451,
                                      320055263, 3757649717LL, 159846296757LL, 2168151028368LL};
constexpr int kDefaultCountTier = 7;    // criterion 1 default range
constexpr int kExtendedCountTier = 12;  // extended range: all documented values

// probabilities at n = 3..7, printed to 12 decimal digits
const std::vector<std::string> kProbabilityDecimals{
    "0.008928571429", "0.001125541126", "0.006866149723", "0.001872252397",
    "0.005245153668"};

struct SEntry {
    int i1, i2, i3;
    long long num, den;
};
const std::vector<SEntry> kScaledLimits{
    {0, 0, 0, 1, 1},      {0, 0, 2, 1, 1},     {0, 0, 4, 3, 1},     {0, 1, 1, -1, 2},
    {0, 1, 3, -3, 2},     {0, 1, 5, -15, 2},   {0, 2, 2, 3, 2},     {0, 2, 4, 6, 1},
    {0, 3, 3, -21, 4},    {0, 3, 5, -30, 1},   {0, 4, 4, 57, 2},    {0, 5, 5, -765, 4},
    {1, 1, 2, 0, 1},      {1, 1, 4, 3, 2},     {1, 2, 3, -3, 4},    {1, 2, 5, -15, 2},
    {1, 3, 4, 3, 2},      {1, 4, 5, -45, 4},   {2, 2, 2, 3, 2},     {2, 2, 4, 6, 1},
    {2, 3, 3, -3, 1},     {2, 3, 5, -45, 2},   {2, 4, 4, 45, 2},    {2, 5, 5, -135, 1},
    {3, 3, 4, 0, 1},      {3, 4, 5, -135, 4},  {4, 4, 4, 135, 2},   {4, 5, 5, -945, 4}};

// published coefficient list for the (4,5,5) moment: n^3/2837835 times this
// degree-18 bracket (descending). The list as published carries a global
// sign error — evaluating it gives the exact negation of the true moment at
// every n — so the fit is compared against its negation.
const std::vector<long long> kM455Bracket{
    39239200,      66146080,      -816055240,    1114633520,   3208398492,
    -13589761044,  25028291837,   -38043392560,  62580129596,  -103184180072,
    157753326632,  -224678523360, 293133737664,  -336053442624, 322828696448,
    -243844376832, 132045454336,  -44452356096,  6864979968};
constexpr long long kM455Prefactor = 2837835;

const DeckSet kMagicSquareDecks{{{1, 6, 8}, {3, 5, 7}, {2, 4, 9}}};

const std::vector<std::vector<int>> kEfronDice{
    {1, 1, 5, 5, 5, 5}, {4, 4, 4, 4, 4, 4}, {3, 3, 3, 3, 7, 7}, {2, 2, 2, 6, 6, 6}};
const std::vector<std::vector<int>> kUniqueM6Dice{
    {1, 1, 5, 5, 5, 5}, {4, 4, 4, 4, 4, 4}, {3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 6, 6}};

// ---- helpers -----------------------------------------------------------

Rational parse_decimal(const std::string& s) {
    auto dot = s.find('.');
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    // leading zeros would read as an octal prefix
    size_t nz = digits.find_first_not_of('0');
    digits = nz == std::string::npos ? "0" : digits.substr(nz);
    BigInt num(digits);
    BigInt den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(num, den);
}

using Check = std::function<void(std::ostringstream&)>;

CriterionResult timed(int id, std::string name, const Check& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    std::ostringstream why;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(why);
        r.pass = why.str().empty();
        r.detail = r.pass ? "ok" : why.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

template <class T>
std::string triple_str(const T& o) {
    return "(" + std::to_string(o[0]) + "," + std::to_string(o[1]) + "," +
           std::to_string(o[2]) + ")";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            std::ostream* progress) {
    std::vector<CriterionResult> results;
    const EngineCaps& caps = opts.caps;
    auto push = [&](CriterionResult r) {
        if (progress) *progress << format_criterion_line(r) << std::endl;
        results.push_back(std::move(r));
    };

    push(timed(1, "counting sequence", [&](std::ostringstream& why) {
        const int tier = opts.extended ? kExtendedCountTier : kDefaultCountTier;
        for (int n = 1; n <= tier; ++n) {
            BigInt got = count_suckers({n, n, n}, caps);
            if (got != kCounts[static_cast<size_t>(n) - 1]) {
                why << "count(" << n << ") = " << got << ", expected "
                    << kCounts[static_cast<size_t>(n) - 1] << "; ";
            }
            if (got % 3 != 0 || got / 3 != kReduced[static_cast<size_t>(n) - 1])
                why << "reduced(" << n << ") = " << (got / 3) << "; ";
        }
    }));

    push(timed(2, "reduced counts and probabilities", [&](std::ostringstream& why) {
        for (int n = 3; n <= 6; ++n) {
            BigInt got = count_suckers_reduced({n, n, n}, caps);
            if (got != kReduced[static_cast<size_t>(n) - 1])
                why << "reduced(" << n << ") = " << got << "; ";
        }
        const Rational tol(1, 1000000000);
        for (int n = 3; n <= 7; ++n) {
            Rational p = probability({n, n, n}, caps);
            Rational ref = parse_decimal(kProbabilityDecimals[static_cast<size_t>(n) - 3]);
            Rational diff = p > ref ? p - ref : ref - p;
            if (diff >= tol) why << "probability(" << n << ") off by " << diff.str() << "; ";
        }
    }));

    push(timed(3, "listing", [&](std::ostringstream& why) {
        const std::vector<long long> expect{5, 13, 1732};
        bool magic_seen = false;
        for (int n = 3; n <= 5; ++n) {
            auto sets = enumerate_suckers({n, n, n}, /*reduce=*/true, caps);
            if (static_cast<long long>(sets.size()) != expect[static_cast<size_t>(n) - 3])
                why << "listing(" << n << ") size " << sets.size() << "; ";
            for (const DeckSet& d : sets) {
                if (!is_suckers_bet(d.decks)) {
                    why << "non-qualifying set listed at n=" << n << "; ";
                    break;
                }
                if (n == 3 && d.decks == kMagicSquareDecks.decks) magic_seen = true;
            }
        }
        if (!magic_seen) why << "magic-square set missing at n=3; ";
    }));

    push(timed(4, "dice enumeration", [&](std::ostringstream& why) {
        const std::vector<int> faces{6, 6, 6, 6};
        const std::vector<std::pair<int, long long>> expect{{6, 1}, {7, 38}, {8, 755}};
        for (auto [m, cnt] : expect) {
            auto sets = enumerate_tieless(4, faces, m, /*reduce=*/true);
            if (static_cast<long long>(sets.size()) != cnt) {
                why << "m=" << m << " reduced count " << sets.size() << " (expected " << cnt
                    << "; if face profile differs from (6,6,6,6) this is the first suspect); ";
                continue;
            }
            for (const DiceSet& d : sets)
                if (!d.is_tieless() || !verify_dice_cycle(d.dice).all_strict) {
                    why << "invalid set at m=" << m << "; ";
                    break;
                }
            if (m == 6) {
                DiceSet ref{kUniqueM6Dice, 6};
                if (!(sets[0] == canonical_rotation(ref))) why << "m=6 set differs; ";
            }
            if (m == 7) {
                DiceSet ref{kEfronDice, 7};
                DiceSet canon = canonical_rotation(ref);
                bool seen = false;
                for (const DiceSet& d : sets) seen = seen || d == canon;
                if (!seen) why << "the four-dice cycle set missing at m=7; ";
            }
        }
    }));

    push(timed(5, "oracle equivalence", [&](std::ostringstream& why) {
        VerifyReport rep = run_verification(10);
        if (!rep.ok) {
            why << rep.failures.size() << " failures, first: " << rep.failures.front();
        }
    }));

    push(timed(6, "symmetries and vanishing odd moments", [&](std::ostringstream& why) {
        for (int n = 1; n <= 6; ++n) {
            LaurentPoly f = compute_F({n, n, n}, caps);
            if (!(f == f.reciprocal_substitution())) why << "reversal fails at n=" << n << "; ";
            if (!(f == f.variables_rotated(1))) why << "rotation fails at n=" << n << "; ";
            for (int t = 1; t <= 5; t += 2)
                for (int i1 = 0; i1 <= t; ++i1)
                    for (int i2 = 0; i1 + i2 <= t; ++i2) {
                        std::vector<int> order{i1, i2, t - i1 - i2};
                        if (f.power_sum(order) != 0) {
                            why << "odd moment " << triple_str(order) << " nonzero at n=" << n
                                << "; ";
                        }
                    }
        }
    }));

    push(timed(7, "closed forms by fitting", [&](std::ostringstream& why) {
        MomentPolynomial var = fit_moment_polynomial({0, 0, 2}, -1, caps);
        // n^2(2n+1)/3, ascending
        std::vector<Rational> var_ref{Rational(0), Rational(0), Rational(1, 3), Rational(2, 3)};
        if (var.coeffs != var_ref) why << "variance fit mismatch: " << var.str() << "; ";

        MomentPolynomial cov = fit_moment_polynomial({0, 1, 1}, -1, caps);
        std::vector<Rational> cov_ref{Rational(0), Rational(0), Rational(0), Rational(-1, 3)};
        if (cov.coeffs != cov_ref) why << "covariance fit mismatch: " << cov.str() << "; ";

        // kurtosis identity 3(10n^2-n-4)/(5n(2n+1)) as a rational-function
        // identity between the fitted quartic and squared variance
        MomentPolynomial m4 = fit_moment_polynomial({0, 0, 4}, -1, caps);
        for (int n = 1; n <= 12; ++n) {
            Rational nn(n);
            Rational lhs = m4.eval(nn) * Rational(5) * nn * (2 * nn + 1);
            Rational v = var.eval(nn);
            Rational rhs = Rational(3) * (10 * nn * nn - nn - 4) * v * v;
            if (lhs != rhs) why << "kurtosis identity fails at n=" << n << "; ";
        }

        MomentPolynomial big = fit_moment_polynomial({4, 5, 5}, -1, caps);
        std::vector<Rational> expect(static_cast<size_t>(22), Rational(0));
        for (size_t i = 0; i < kM455Bracket.size(); ++i) {
            int power = 21 - static_cast<int>(i);
            // negation of the published list; see data comment above
            expect[static_cast<size_t>(power)] = Rational(-kM455Bracket[i], kM455Prefactor);
        }
        if (big.coeffs != expect) why << "(4,5,5) fit mismatch: " << big.str() << "; ";
    }));

    push(timed(8, "limiting moments", [&](std::ostringstream& why) {
        for (const SEntry& e : kScaledLimits) {
            Rational got = gaussian_scaled_limit({e.i1, e.i2, e.i3});
            if (got != Rational(e.num, e.den))
                why << "S(" << e.i1 << "," << e.i2 << "," << e.i3 << ") = " << got.str() << "; ";
        }
        for (int n = 0; n <= 5; ++n) {
            Rational direct = gaussian_scaled_limit({2 * n, 2 * n, 2 * n});
            if (diagonal_closed_form(n) != direct) why << "diagonal form fails at n=" << n << "; ";
        }
        Rational sc = scaled_moment(40, {2, 2, 2}, caps);
        Rational gap = sc - Rational(3, 2);
        if (gap < 0) gap = -gap;
        if (!(gap < Rational(1, 10)))
            why << "scaled (2,2,2) at n=40 off by " << gap.str() << "; ";
    }));

    push(timed(9, "density normalization", [&](std::ostringstream& why) {
        const std::vector<Rational> cs{Rational(0), Rational(1, 4), Rational(1, 2)};
        for (const Rational& c : cs) {
            double closed = normalization_constant(c).value();
            double quad = gaussian_density_integral(to_double(c));
            if (std::abs(closed - quad) >= 1e-8) {
                why << "N(" << c.str() << ") quadrature gap " << std::abs(closed - quad) << "; ";
            }
        }
    }));

    return results;
}

std::string format_criterion_line(const CriterionResult& r) {
    std::ostringstream os;
    os << "criterion " << r.id << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << " ("
       << static_cast<long long>(r.seconds * 1000.0) << " ms)";
    if (!r.pass) os << " -- " << r.detail;
    return os.str();
}

}  // namespace nontrans
