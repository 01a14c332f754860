#pragma once

#include "kerov/rational.hpp"

#include <string>
#include <vector>

namespace kerov {

// Univariate polynomial over Q, coefficients in ascending degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(int degree, const Rational& c = 1);
    static Polynomial linear_root(const Rational& r);  // x - r

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial monic() const;
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// quotient and remainder; throws on division by zero
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);  // monic, zero if both zero

// rescaled Chebyshev of the second kind u_k(x) = U_k(x/2)
Polynomial chebyshev_u(int k);
// t_k(x) = 2 T_k(x/2), monic for k >= 1
Polynomial chebyshev_t(int k);
// x H_m = H_{m+1} + m H_{m-1}, H_0 = 1, H_1 = x
Polynomial hermite_mod(int m);

// Lagrange interpolation through (x_i, y_i); exact
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace kerov
