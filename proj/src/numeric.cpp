#include "nontrans/numeric.hpp"

#include <map>

namespace nontrans {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(long long n, unsigned j) {
    if (j == 0) return 1;
    if (n >= 0 && static_cast<long long>(j) > n) return 0;
    BigInt num = 1;
    for (unsigned t = 0; t < j; ++t) num *= BigInt(n - static_cast<long long>(t));
    return num / factorial(j);
}

BigInt multinomial(std::span<const int> counts) {
    unsigned total = 0;
    for (int c : counts) {
        if (c < 0) throw DomainError("multinomial: negative count");
        total += static_cast<unsigned>(c);
    }
    BigInt r = factorial(total);
    for (int c : counts) r /= factorial(static_cast<unsigned>(c));
    return r;
}

BigInt stirling2(unsigned n, unsigned j) {
    if (j > n) return 0;
    if (n == 0) return 1;  // S2(0,0) = 1
    if (j == 0) return 0;
    // S2(n,j) = j*S2(n-1,j) + S2(n-1,j-1), built row by row.
    std::vector<BigInt> row(n + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned t = std::min(i, n); t >= 1; --t)
            row[t] = BigInt(t) * row[t] + row[t - 1];
        row[0] = 0;
    }
    return row[j];
}

std::string decimal_string(const Rational& r, int digits) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = (num * scale * 2 + den) / (den * 2);  // round half away from zero
    BigInt ip = scaled / scale, fp = scaled % scale;
    std::string out = (neg && scaled != 0 ? "-" : "") + ip.str();
    if (digits > 0) {
        std::string frac = fp.str();
        frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace nontrans
