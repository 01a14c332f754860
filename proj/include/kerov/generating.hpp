#pragma once

// Generating-series relations shared by the numeric evaluators (T = Rational)
// and the symbolic basis changes (T = Observable).

#include "kerov/series.hpp"

#include <vector>

namespace kerov {

// H(t) = 1 + sum h_k t^k = exp(sum_{k>=1} pt_k t^k / k); pt indexed by k (entry 0 ignored).
// pt_1 vanishes on diagrams, but numeric callers pass the measured value through.
template <class T>
std::vector<T> moments_from_ptilde(const std::vector<T>& pt, int kmax, const T& zero) {
    FormalSeries<T> s(kmax, zero);
    for (int k = 1; k <= kmax && k < static_cast<int>(pt.size()); ++k) s[k] = pt[k] * Rational(1, k);
    auto h = s.exp();
    std::vector<T> out;
    for (int k = 0; k <= kmax; ++k) out.push_back(h[k]);
    return out;
}

// pt_k = k [t^k] log H; h indexed by k with h_0 = 1 assumed, h_1 ignored
template <class T>
std::vector<T> ptilde_from_moments(const std::vector<T>& h, int kmax, const T& zero) {
    auto s = FormalSeries<T>::one(kmax, zero);
    for (int k = 2; k <= kmax && k < static_cast<int>(h.size()); ++k) s[k] = h[k];
    auto l = s.log();
    std::vector<T> out(kmax + 1, zero);
    for (int k = 2; k <= kmax; ++k) out[k] = l[k] * Rational(k);
    return out;
}

// f_k = -1/(k-1) [t^k] H^{-(k-1)}, with h_1 = 0
template <class T>
std::vector<T> free_cumulants_from_moments(const std::vector<T>& h, int kmax, const T& zero) {
    auto s = FormalSeries<T>::one(kmax, zero);
    for (int k = 2; k <= kmax && k < static_cast<int>(h.size()); ++k) s[k] = h[k];
    std::vector<T> out(kmax + 1, zero);
    for (int k = 2; k <= kmax; ++k) out[k] = s.pow(Rational(-(k - 1)))[k] * Rational(-1, k - 1);
    return out;
}

// inverse of the above: h_k = 1/(k+1) [u^k] B^{k+1}, B = 1 + sum_{j>=2} f_j u^j
template <class T>
std::vector<T> moments_from_free_cumulants(const std::vector<T>& f, int kmax, const T& zero) {
    auto s = FormalSeries<T>::one(kmax, zero);
    for (int k = 2; k <= kmax && k < static_cast<int>(f.size()); ++k) s[k] = f[k];
    std::vector<T> out(kmax + 1, zero);
    out[0] = s.unit();
    for (int k = 2; k <= kmax; ++k) out[k] = s.pow(Rational(k + 1))[k] * Rational(1, k + 1);
    return out;
}

// Wassermann expansion of the normalized k-cycle character:
// p#_k = [t^{k+1}] -(1/k) prod_{j=1..k} (1 - (j - 1/2) t) exp(sum_j p_j t^j / j (1 - (1 - k t)^{-j}))
// p indexed by j, needs entries 1..k
template <class T>
T psharp_cycle_from_power_sums(int k, const std::vector<T>& p, const T& zero) {
    const int order = k + 1;
    FormalSeries<T> expo(order, zero);
    for (int j = 1; j <= k; ++j) {
        if (p[j] == zero) continue;
        // (1 - (1 - k t)^{-j}) = - sum_{m>=1} C(j+m-1, m) k^m t^m
        for (int m = 1; j + m <= order; ++m) {
            Rational c(binomial(j + m - 1, m) * power(BigInt(k), m), j);
            c.canonicalize();
            expo[j + m] -= p[j] * c;
        }
    }
    auto e = expo.exp();
    FormalSeries<Rational> falling = FormalSeries<Rational>::one(order, Rational(0));
    for (int j = 1; j <= k; ++j) {
        FormalSeries<Rational> f = FormalSeries<Rational>::one(order, Rational(0));
        f[1] = -(Rational(j) - Rational(1, 2));
        falling = falling * f;
    }
    T acc = zero;
    for (int i = 0; i <= order; ++i) {
        if (falling[i] == 0 || e[order - i] == zero) continue;
        acc += e[order - i] * falling[i];
    }
    acc *= Rational(-1, k);
    return acc;
}

}  // namespace kerov
