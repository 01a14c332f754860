#pragma once

#include "kerov/partitions.hpp"
#include "kerov/rational.hpp"

#include <map>
#include <string>

namespace kerov {

// Generator systems of the observable algebra. In the polynomial bases a key
// lists generator indices (p_3 p_1^2 -> (3,1,1)); in the psharp basis a key
// is the index rho of the linear basis element p#_rho.
enum class Basis { p, ptilde, htilde, psharp, ftilde };

std::string basis_tag(Basis b);     // "p", "pt", "ht", "p#", "ft"
Basis parse_basis_tag(const std::string& tag);

// Larger total first, then reverse-lexicographic; constant term last.
struct MonomialOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

class Observable {
public:
    using Terms = std::map<Partition, Rational, MonomialOrder>;

    explicit Observable(Basis b = Basis::p) : basis_(b) {}
    static Observable constant(Basis b, const Rational& c);
    static Observable generator(Basis b, int k);
    static Observable term(Basis b, Partition key, const Rational& c = 1);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Partition& key) const;
    int degree() const;  // largest key total, -1 for zero

    void add_term(Partition key, const Rational& c);

    Observable& operator+=(const Observable& o);
    Observable& operator-=(const Observable& o);
    Observable& operator*=(const Rational& s);
    Observable& operator+=(const Rational& c);  // constant term
    Observable& operator-=(const Rational& c);
    Observable operator-() const;

    friend Observable operator+(Observable a, const Observable& b) { return a += b; }
    friend Observable operator-(Observable a, const Observable& b) { return a -= b; }
    friend Observable operator*(Observable a, const Rational& s) { return a *= s; }
    friend Observable operator*(const Rational& s, Observable a) { return a *= s; }
    // polynomial product; the psharp basis multiplies through structure constants
    friend Observable operator*(const Observable& a, const Observable& b);
    friend bool operator==(const Observable& a, const Observable& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    // "4·p₃ + p₁"
    std::string to_text() const;

private:
    void check_same(const Observable& o) const;

    Basis basis_;
    Terms terms_;
};

Observable power(const Observable& e, int m);

}  // namespace kerov
