#pragma once

#include "kerov/observable.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace kerov {

// Element of the algebra with sqrt(p#_1) adjoined, in the basis
// p#_rho (p#_1)^{half/2} with no part of rho equal to 1.
class ExtendedElement {
public:
    using Key = std::pair<Partition, int>;  // (rho, half)
    struct KeyOrder {
        bool operator()(const Key& a, const Key& b) const;
    };
    using Terms = std::map<Key, Rational, KeyOrder>;

    ExtendedElement() = default;
    static ExtendedElement constant(const Rational& c);
    // c p#_rho (p#_1)^{half/2}; rho may contain ones, which are stripped
    static ExtendedElement raw(const Partition& rho, int half, const Rational& c = 1);
    static ExtendedElement from_psharp(const Observable& e);  // any basis, converted
    static ExtendedElement p1_power(int half) { return raw({}, half); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& rho, int half) const;
    // deg_1 = |rho| + half over the support; empty for zero
    std::optional<int> deg1() const;

    ExtendedElement& operator+=(const ExtendedElement& o);
    ExtendedElement& operator-=(const ExtendedElement& o);
    ExtendedElement& operator*=(const Rational& s);
    friend ExtendedElement operator+(ExtendedElement a, const ExtendedElement& b) { return a += b; }
    friend ExtendedElement operator-(ExtendedElement a, const ExtendedElement& b) { return a -= b; }
    friend ExtendedElement operator*(ExtendedElement a, const Rational& s) { return a *= s; }
    friend bool operator==(const ExtendedElement& a, const ExtendedElement& b) { return a.terms_ == b.terms_; }

    // multiply by (p#_1)^{half/2}
    ExtendedElement shifted(int half) const;

    std::string to_text() const;

private:
    void add_normalized(const Partition& rho_no_ones, int half, const Rational& c);
    Terms terms_;
};

// rewrite p#_{sigma u 1^j} through p#_{sigma u 1} = p#_sigma p#_1 - |sigma| p#_sigma
ExtendedElement ext_normalize(const std::vector<std::tuple<Partition, int, Rational>>& raw_terms);
ExtendedElement ext_multiply(const ExtendedElement& a, const ExtendedElement& b);
ExtendedElement ext_power(const ExtendedElement& a, int m);

// p#_rho / (p#_1)^{|rho|_1 / 2}: eta_rho without the constant prod_k k^{m_k/2}
ExtendedElement eta_unscaled(const Partition& rho);
// p#_k / (p#_1)^{k/2} = sqrt(k) eta_k
ExtendedElement xi(int k);
// q_k and g_k as elements of the extended algebra
ExtendedElement ext_q(int k);
ExtendedElement ext_g(int k);

}  // namespace kerov
