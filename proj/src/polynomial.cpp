#include "kerov/polynomial.hpp"

#include <stdexcept>

namespace kerov {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::operator()(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial p = *this;
    Rational lead = leading();
    for (auto& c : p.c_) c /= lead;
    return p;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        bool unit = mag == 1 && i > 0;
        if (!unit) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Polynomial(), a};
    std::vector<Rational> quo(da - db + 1);
    Rational lead = b.leading();
    for (int i = da; i >= db; --i) {
        Rational f = rem[i] / lead;
        quo[i - db] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial chebyshev_u(int k) {
    if (k < 0) throw std::invalid_argument("chebyshev_u: negative index");
    std::vector<Rational> c(k + 1);
    for (int j = 0; 2 * j <= k; ++j) {
        BigInt b = binomial(k - j, j);
        c[k - 2 * j] = (j % 2 ? -1 : 1) * Rational(b);
    }
    return Polynomial(std::move(c));
}

Polynomial chebyshev_t(int k) {
    if (k < 1) throw std::invalid_argument("chebyshev_t: index must be >= 1");
    std::vector<Rational> c(k + 1);
    for (int j = 0; 2 * j <= k; ++j) {
        Rational v(binomial(k - j, j) * k, k - j);
        v.canonicalize();
        c[k - 2 * j] = (j % 2 ? -1 : 1) * v;
    }
    return Polynomial(std::move(c));
}

Polynomial hermite_mod(int m) {
    if (m < 0) throw std::invalid_argument("hermite_mod: negative index");
    Polynomial prev = Polynomial::constant(1);
    if (m == 0) return prev;
    Polynomial cur = Polynomial::monomial(1);
    Polynomial x = Polynomial::monomial(1);
    for (int j = 1; j < m; ++j) {
        Polynomial next = x * cur - prev * Rational(j);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    Polynomial out;
    for (size_t i = 0; i < xs.size(); ++i) {
        Polynomial basis = Polynomial::constant(1);
        Rational denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial::linear_root(xs[j]);
            denom *= xs[i] - xs[j];
        }
        out += basis * Rational(ys[i] / denom);
    }
    return out;
}

}  // namespace kerov
