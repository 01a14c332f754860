#include "kerov/rational.hpp"

#include <cmath>

namespace kerov {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt falling_factorial(long n, long k) {
    BigInt r = 1;
    for (long i = 0; i < k; ++i) r *= n - i;
    return r;
}

Rational power(const Rational& x, unsigned k) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), k);
    return r;
}

BigInt power(const BigInt& x, unsigned k) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

BigInt catalan(unsigned m) {
    BigInt c = binomial(2 * m, m);
    return c / (m + 1);
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

double scaled_to_double(const Rational& value, long n, int half) {
    if (value == 0) return 0.0;
    return value.get_d() * std::pow(static_cast<double>(n), half / 2.0);
}

}  // namespace kerov
