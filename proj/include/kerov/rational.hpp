#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kerov {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);              // 0 outside 0 <= k <= n
BigInt falling_factorial(long n, long k);     // n (n-1) ... (n-k+1)
Rational power(const Rational& x, unsigned k);
BigInt power(const BigInt& x, unsigned k);
BigInt catalan(unsigned m);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
inline double to_double(const Rational& q) { return q.get_d(); }

// value * n^(half/2) as a double, with the rational part kept exact until the end
double scaled_to_double(const Rational& value, long n, int half);

}  // namespace kerov
