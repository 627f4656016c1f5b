#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nontrans {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error taxonomy; the CLI maps these to exit codes 2..5.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {  // bad arguments (exit 2)
    using Error::Error;
};
struct SizeError : Error {  // resource cap exceeded (exit 3)
    using Error::Error;
};
struct PrecisionError : Error {  // truncation/degree shortfall (exit 4)
    using Error::Error;
};
struct InvariantError : Error {  // internal invariant violated (exit 5)
    using Error::Error;
};

BigInt factorial(unsigned n);

// Generalized binomial C(n, j): n may be negative, C(-m, j) = (-1)^j C(m+j-1, j).
BigInt binomial(long long n, unsigned j);

// (a_1+...+a_k)! / (a_1! ... a_k!)
BigInt multinomial(std::span<const int> counts);

// Stirling numbers of the second kind, S2(n, j).
BigInt stirling2(unsigned n, unsigned j);

// Exact decimal rendering of a rational, rounded half away from zero.
// digits = digits after the decimal point. 15/1680 with 12 digits ->
// "0.008928571429".
std::string decimal_string(const Rational& r, int digits);

double to_double(const Rational& r);

}  // namespace nontrans
