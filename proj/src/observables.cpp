#include "kerov/observables.hpp"

#include "kerov/characters.hpp"
#include "kerov/generating.hpp"
#include "kerov/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kerov {

namespace {

BigInt ipow(long base, int k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), static_cast<unsigned long>(k));
    if (base < 0 && k % 2) r = -r;
    return r;
}

}  // namespace

Rational eval_p(int k, const YoungDiagram& lambda) {
    if (k < 1) throw std::invalid_argument("eval_p: k >= 1");
    auto f = frobenius_coords(lambda);
    BigInt s = 0;
    for (int i = 0; i < f.rank(); ++i) s += ipow(f.twice_a[i], k) - ipow(-f.twice_b[i], k);
    Rational r(s, ipow(2, k));
    r.canonicalize();
    return r;
}

std::vector<Rational> power_sums(const YoungDiagram& lambda, int kmax) {
    auto f = frobenius_coords(lambda);
    std::vector<Rational> out(kmax + 1);
    const int d = f.rank();
    std::vector<BigInt> pa(d, 1), pb(d, 1);
    BigInt two_k = 1;
    for (int k = 1; k <= kmax; ++k) {
        BigInt s = 0;
        two_k *= 2;
        for (int i = 0; i < d; ++i) {
            pa[i] *= f.twice_a[i];
            pb[i] *= -f.twice_b[i];
            s += pa[i] - pb[i];
        }
        out[k] = Rational(s, two_k);
        out[k].canonicalize();
    }
    return out;
}

Rational eval_ptilde(int k, const YoungDiagram& lambda) {
    if (k < 1) throw std::invalid_argument("eval_ptilde: k >= 1");
    auto e = profile_extrema(lambda);
    BigInt s = 0;
    for (int x : e.minima) s += ipow(x, k);
    for (int y : e.maxima) s -= ipow(y, k);
    return Rational(s);
}

std::vector<Rational> ptilde_values(const YoungDiagram& lambda, int kmax) {
    auto e = profile_extrema(lambda);
    std::vector<Rational> out(kmax + 1);
    std::vector<BigInt> px(e.minima.size(), 1), py(e.maxima.size(), 1);
    for (int k = 1; k <= kmax; ++k) {
        BigInt s = 0;
        for (size_t i = 0; i < px.size(); ++i) {
            px[i] *= e.minima[i];
            s += px[i];
        }
        for (size_t j = 0; j < py.size(); ++j) {
            py[j] *= e.maxima[j];
            s -= py[j];
        }
        out[k] = Rational(s);
    }
    return out;
}

Rational eval_ptilde_scaled(int k, const InterlacingExtrema& e, const Rational& s) {
    Rational acc = 0;
    for (int x : e.minima) acc += power(Rational(x) / s, k);
    for (int y : e.maxima) acc -= power(Rational(y) / s, k);
    return acc;
}

Rational eval_psharp(const Partition& rho, const YoungDiagram& lambda) {
    const int r = size(rho);
    const int n = lambda.size();
    if (n < r) return 0;
    Rational v = character_ratio(lambda, rho) * Rational(falling_factorial(n, r));
    return v;
}

Rational eval_psharp_residue(int k, const YoungDiagram& lambda) {
    if (k < 1) throw std::invalid_argument("eval_psharp_residue: k >= 1");
    // t = 1/z; Phi(z)/Phi(z-k) = prod (1 + b t)(1 - (a + k) t) / ((1 - a t)(1 + (b - k) t))
    const int order = k + 1;
    auto f = frobenius_coords(lambda);
    auto num = RationalSeries::one(order, Rational(0));
    auto den = RationalSeries::one(order, Rational(0));
    auto lin = [&](const Rational& c) {
        auto s = RationalSeries::one(order, Rational(0));
        s[1] = c;
        return s;
    };
    for (int i = 0; i < f.rank(); ++i) {
        Rational a = f.a(i), b = f.b(i);
        num = num * lin(b) * lin(-(a + k));
        den = den * lin(-a) * lin(b - k);
    }
    auto s = num * den.pow(Rational(-1));
    // (z - 1/2)^{falling k} = z^k prod_{j<k} (1 - (j + 1/2) t)
    for (int j = 0; j < k; ++j) s = s * lin(-(Rational(j) + Rational(1, 2)));
    return -s[order] / Rational(k);
}

Rational TransitionMeasure::moment(int k) const {
    Rational acc = 0;
    for (const auto& a : atoms) acc += a.mass * power(a.position, k);
    return acc;
}

TransitionMeasure TransitionMeasure::scaled(const Rational& s) const {
    TransitionMeasure m;
    for (const auto& a : atoms) m.atoms.push_back({a.position / s, a.mass});
    return m;
}

TransitionMeasure transition_measure(const YoungDiagram& lambda) {
    auto e = profile_extrema(lambda);
    TransitionMeasure m;
    for (size_t i = 0; i < e.minima.size(); ++i) {
        BigInt num = 1, den = 1;
        const long xi = e.minima[i];
        for (int y : e.maxima) num *= xi - y;
        for (size_t l = 0; l < e.minima.size(); ++l)
            if (l != i) den *= xi - e.minima[l];
        Rational mass(num, den);
        mass.canonicalize();
        m.atoms.push_back({Rational(xi), mass});
    }
    return m;
}

Rational moment_htilde(int k, const YoungDiagram& lambda) {
    if (k < 2) throw std::invalid_argument("moment_htilde: k >= 2");
    return transition_measure(lambda).moment(k);
}

std::vector<Rational> free_cumulants(const YoungDiagram& lambda, int kmax) {
    if (kmax < 2) throw std::invalid_argument("free_cumulants: kmax >= 2");
    auto mu = transition_measure(lambda);
    std::vector<Rational> h(kmax + 1);
    h[0] = 1;
    for (int k = 2; k <= kmax; ++k) h[k] = mu.moment(k);
    return free_cumulants_from_moments(h, kmax, Rational(0));
}

Rational omega_moment(int k) {
    if (k < 2) throw std::invalid_argument("omega_moment: k >= 2");
    if (k % 2) return 0;
    return Rational(binomial(k, k / 2));
}

Rational semicircle_moment(int k) {
    if (k < 1) throw std::invalid_argument("semicircle_moment: k >= 1");
    if (k % 2) return 0;
    return Rational(catalan(k / 2));
}

double omega(double x) {
    if (std::abs(x) >= 2) return std::abs(x);
    return 2 / std::numbers::pi * (x * std::asin(x / 2) + std::sqrt(4 - x * x));
}

double semicircle_density(double x) {
    if (std::abs(x) >= 2) return 0;
    return std::sqrt(4 - x * x) / (2 * std::numbers::pi);
}

ExactFluctuations exact_fluctuations(const YoungDiagram& lambda, int kmax) {
    if (kmax < 2) throw std::invalid_argument("fluctuation functionals need kmax >= 2");
    if (lambda.empty()) throw std::invalid_argument("fluctuation functionals need a nonempty diagram");
    const long n = lambda.size();
    ExactFluctuations ex;
    ex.n = n;

    auto pt = ptilde_values(lambda, kmax + 2);
    auto h = moments_from_ptilde(pt, kmax, Rational(0));
    auto p = power_sums(lambda, kmax);

    ex.q.resize(kmax + 2);
    for (int k = 1; k <= kmax + 1; ++k) {
        Rational num = pt[k + 1];
        if (k % 2) {
            int m = (k + 1) / 2;
            num -= Rational(binomial(2 * m, m) * power(BigInt(n), m));
        }
        ex.q[k] = {num / Rational(k + 1), -k};
    }
    // g_0 = h_0 - 1 = 0; g_1 and g_2 are computed, and vanish identically
    ex.g.resize(kmax + 1);
    for (int k = 1; k <= kmax; ++k) {
        Rational num = h[k];
        if (k % 2 == 0) num -= Rational(catalan(k / 2) * power(BigInt(n), k / 2));
        ex.g[k] = {num, -(k - 1)};
    }
    ex.psharp.resize(kmax + 1);
    for (int k = 2; k <= kmax; ++k) ex.psharp[k] = {psharp_cycle_from_power_sums(k, p, Rational(0)), -k};
    return ex;
}

FluctuationFunctionals fluctuation_functionals(const YoungDiagram& lambda, int kmax) {
    auto ex = exact_fluctuations(lambda, kmax);
    FluctuationFunctionals f;
    f.n = ex.n;
    f.kmax = kmax;
    auto val = [&](const ScaledValue& v) { return scaled_to_double(v.numerator, ex.n, v.half); };

    f.q.assign(kmax + 2, 0.0);
    for (int k = 1; k <= kmax + 1; ++k) f.q[k] = val(ex.q[k]);
    f.g.assign(kmax + 1, 0.0);
    for (int k = 1; k <= kmax; ++k) f.g[k] = val(ex.g[k]);
    f.eta.assign(kmax + 1, 0.0);
    for (int k = 2; k <= kmax; ++k) f.eta[k] = val(ex.psharp[k]) / std::sqrt(static_cast<double>(k));

    f.u.assign(kmax + 1, 0.0);
    for (int k = 0; k <= kmax; ++k) {
        double acc = 0;
        for (int j = 0; k + 1 - 2 * j >= 1; ++j) {
            int i = k + 1 - 2 * j;
            double c = binomial(k - j, j).get_d() / i;
            acc += (j % 2 ? -c : c) * f.q[i];
        }
        f.u[k] = acc;
    }
    f.t.assign(kmax + 1, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        double acc = 0;
        for (int j = 0; k - 2 * j >= 1; ++j) {
            double c = binomial(k - j, j).get_d() * k / (k - j);
            acc += (j % 2 ? -c : c) * f.g[k - 2 * j];
        }
        f.t[k] = acc;
    }
    return f;
}

}  // namespace kerov
