#pragma once

#include "kerov/rational.hpp"

#include <stdexcept>
#include <vector>

namespace kerov {

// Truncated power series c_0 + c_1 t + ... + c_N t^N over a coefficient ring T.
// T needs +=, -=, T*T, *= Rational and ==. The zero prototype carries any
// context T needs (e.g. a basis tag).
template <class T>
class FormalSeries {
public:
    FormalSeries(int order, T zero) : zero_(std::move(zero)), c_(order + 1, zero_) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }

    static FormalSeries one(int order, const T& zero) {
        FormalSeries s(order, zero);
        s.c_[0] = s.unit();
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int i) const { return c_.at(i); }
    T& operator[](int i) { return c_.at(i); }
    const T& zero() const { return zero_; }
    T unit() const {
        T u = zero_;
        u += Rational(1);
        return u;
    }

    FormalSeries& operator+=(const FormalSeries& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    FormalSeries& operator-=(const FormalSeries& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    FormalSeries& operator*=(const Rational& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
    friend FormalSeries operator*(FormalSeries a, const Rational& s) { return a *= s; }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        a.check(b);
        FormalSeries r(a.order(), a.zero_);
        const int n = a.order();
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i] == a.zero_) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.c_[j] == a.zero_) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    FormalSeries exp() const {
        if (!(c_[0] == zero_)) throw std::domain_error("exp needs zero constant term");
        FormalSeries e(order(), zero_);
        e.c_[0] = unit();
        for (int n = 1; n <= order(); ++n) {
            T acc = zero_;
            for (int k = 1; k <= n; ++k) {
                if (c_[k] == zero_ || e.c_[n - k] == zero_) continue;
                T term = c_[k] * e.c_[n - k];
                term *= Rational(k);
                acc += term;
            }
            acc *= Rational(1, n);
            e.c_[n] = std::move(acc);
        }
        return e;
    }

    FormalSeries log() const {
        if (!(c_[0] == unit())) throw std::domain_error("log needs constant term 1");
        FormalSeries l(order(), zero_);
        for (int n = 1; n <= order(); ++n) {
            T acc = c_[n];
            for (int k = 1; k < n; ++k) {
                if (l.c_[k] == zero_ || c_[n - k] == zero_) continue;
                T term = l.c_[k] * c_[n - k];
                term *= Rational(k, n);
                acc -= term;
            }
            l.c_[n] = std::move(acc);
        }
        return l;
    }

    // S^alpha for constant term 1
    FormalSeries pow(const Rational& alpha) const {
        if (!(c_[0] == unit())) throw std::domain_error("pow needs constant term 1");
        FormalSeries p(order(), zero_);
        p.c_[0] = unit();
        for (int n = 1; n <= order(); ++n) {
            T acc = zero_;
            for (int k = 1; k <= n; ++k) {
                if (c_[k] == zero_ || p.c_[n - k] == zero_) continue;
                Rational w = alpha * k - (n - k);
                if (w == 0) continue;
                T term = c_[k] * p.c_[n - k];
                term *= w;
                acc += term;
            }
            acc *= Rational(1, n);
            p.c_[n] = std::move(acc);
        }
        return p;
    }

    // this(inner(t)); inner must have zero constant term
    FormalSeries compose(const FormalSeries& inner) const {
        check(inner);
        if (!(inner.c_[0] == zero_)) throw std::domain_error("compose needs inner series without constant term");
        FormalSeries r(order(), zero_);
        for (int i = order(); i >= 0; --i) {
            r = r * inner;
            r.c_[0] += c_[i];
        }
        return r;
    }

    friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.c_ == b.c_; }

private:
    void check(const FormalSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("series truncation orders differ");
    }

    T zero_;
    std::vector<T> c_;
};

using RationalSeries = FormalSeries<Rational>;

}  // namespace kerov
