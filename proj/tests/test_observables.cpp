#include "kerov/characters.hpp"
#include "kerov/identities.hpp"
#include "kerov/observables.hpp"
#include "kerov/polynomial.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

using namespace kerov;

namespace {

YoungDiagram Y(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }
Rational Q(long a, long b = 1) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

// moment-cumulant recursion: m_n = sum_s k_s sum_{i_1+..+i_s = n-s} m_{i_1}..m_{i_s}
std::vector<Rational> free_cumulants_by_recursion(const std::vector<Rational>& m, int kmax) {
    // conv[s][j] = sum over compositions of j into s parts of products of moments
    std::vector<Rational> k(kmax + 1);
    for (int n = 1; n <= kmax; ++n) {
        std::vector<std::vector<Rational>> conv(n + 1, std::vector<Rational>(n + 1));
        conv[0][0] = 1;
        for (int s = 1; s <= n; ++s)
            for (int j = 0; j <= n - s; ++j)
                for (int i = 0; i <= j; ++i) conv[s][j] += conv[s - 1][j - i] * m[i];
        Rational rest = 0;
        for (int s = 1; s < n; ++s) rest += k[s] * conv[s][n - s];
        k[n] = m[n] - rest;  // the s = n term is k_n m_0^n
    }
    return k;
}

double trapezoid(const std::function<double(double)>& f, double a, double b, int steps) {
    double h = (b - a) / steps, s = (f(a) + f(b)) / 2;
    for (int i = 1; i < steps; ++i) s += f(a + i * h);
    return s * h;
}

}  // namespace

TEST_CASE("p_k examples") {
    CHECK(eval_p(1, Y({3, 1})) == 4);
    CHECK(eval_p(2, Y({1})) == 0);
    CHECK(eval_p(3, Y({2})) == Q(7, 2));
}

TEST_CASE("p_k from contents: sum over cells of (c+1/2)^k - (c-1/2)^k") {
    for (const auto& l : diagrams_up_to(9))
        for (int k = 1; k <= 6; ++k) {
            Rational s = 0;
            for (int i = 0; i < l.length(); ++i)
                for (int j = 0; j < l.row(i); ++j) {
                    Rational c(j - i);
                    s += power(c + Q(1, 2), k) - power(c - Q(1, 2), k);
                }
            CHECK(eval_p(k, l) == s);
        }
}

TEST_CASE("p~_k examples") {
    CHECK(eval_ptilde(2, Y({2, 1})) == 6);
    CHECK(eval_ptilde(3, Y({2, 1})) == 0);
    CHECK(eval_ptilde(4, Y({2})) == 16);
    for (const auto& l : diagrams_up_to(8)) {
        CHECK(eval_ptilde(1, l) == 0);
        CHECK(eval_ptilde(2, l) == 2 * l.size());
    }
}

TEST_CASE("p#_rho examples") {
    for (const auto& l : diagrams_up_to(7)) CHECK(eval_psharp({1}, l) == l.size());
    CHECK(eval_psharp({2}, Y({2, 1})) == 0);
    CHECK(eval_psharp({3}, Y({2, 1})) == -3);
    CHECK(eval_psharp({3}, Y({1, 1})) == 0);  // |rho| > n
}

TEST_CASE("p#_rho from the definition with characters") {
    for (const auto& l : diagrams_up_to(8))
        for (const auto& rho : partitions_up_to(l.size())) {
            if (rho.empty()) continue;
            const int n = l.size(), r = size(rho);
            Rational falling = 1;
            for (int i = 0; i < r; ++i) falling *= n - i;
            Partition full = join(rho, ones(n - r));
            CHECK(eval_psharp(rho, l) == falling * Rational(character(l, canonical(full))) / Rational(dimension(l)));
        }
}

TEST_CASE("residue route") {
    CHECK(eval_psharp_residue(2, Y({1})) == 0);
    CHECK(eval_psharp_residue(1, Y({2, 1})) == 3);
    CHECK(eval_psharp_residue(3, Y({2, 1})) == -3);
    for (const auto& l : diagrams_up_to(8))
        for (int k = 1; k <= 6; ++k) CHECK(eval_psharp_residue(k, l) == eval_psharp({k}, l));
}

TEST_CASE("transition measure examples") {
    auto m = transition_measure(Y({}));
    REQUIRE(m.atoms.size() == 1);
    CHECK((m.atoms[0].position == 0 && m.atoms[0].mass == 1));
    m = transition_measure(Y({1}));
    REQUIRE(m.atoms.size() == 2);
    CHECK((m.atoms[0].position == -1 && m.atoms[0].mass == Q(1, 2)));
    CHECK((m.atoms[1].position == 1 && m.atoms[1].mass == Q(1, 2)));
}

TEST_CASE("transition measure is the partial-fraction expansion of prod(z-y)/prod(z-x)") {
    for (const auto& l : diagrams_up_to(9)) {
        auto m = transition_measure(l);
        auto e = profile_extrema(l);
        for (long zn : {7L, -13L, 101L})
            for (long zd : {3L, 5L}) {
                Rational z = Q(zn, zd), lhs = 0, rhs = 1;
                for (const auto& a : m.atoms) lhs += a.mass / (z - a.position);
                for (int y : e.maxima) rhs *= z - y;
                for (int x : e.minima) rhs /= z - x;
                CHECK(lhs == rhs);
            }
        Rational total = 0;
        for (const auto& a : m.atoms) {
            CHECK(a.mass > 0);
            total += a.mass;
        }
        CHECK(total == 1);
        CHECK(m.moment(1) == 0);
    }
}

TEST_CASE("h~_k examples") {
    CHECK(moment_htilde(2, Y({2, 1})) == 3);
    CHECK(moment_htilde(3, Y({2, 1})) == 0);
    CHECK(moment_htilde(2, Y({1})) == 1);
}

TEST_CASE("free cumulants") {
    CHECK(free_cumulants(Y({1}), 2)[2] == 1);
    CHECK(free_cumulants(Y({2, 1}), 3)[3] == 0);
    for (const auto& l : diagrams_up_to(8)) {
        auto m = transition_measure(l);
        std::vector<Rational> mom(7);
        for (int k = 0; k <= 6; ++k) mom[k] = m.moment(k);
        auto want = free_cumulants_by_recursion(mom, 6);
        auto got = free_cumulants(l, 6);
        CHECK(got[2] == l.size());
        for (int k = 2; k <= 6; ++k) CHECK(got[k] == want[k]);
    }
}

TEST_CASE("limit shape moments") {
    CHECK(omega_moment(2) == 2);
    CHECK(omega_moment(4) == 6);
    CHECK(omega_moment(5) == 0);
    CHECK(semicircle_moment(2) == 1);
    CHECK(semicircle_moment(4) == 2);
    CHECK(semicircle_moment(3) == 0);
    // p~_k of Omega is the k-th moment of Omega''/2 = 1/(pi sqrt(4-x^2)); x = 2 cos th
    for (int k = 2; k <= 10; ++k) {
        double v = trapezoid([k](double th) { return std::pow(2 * std::cos(th), k) / std::numbers::pi; }, 0, std::numbers::pi, 20000);
        CHECK(omega_moment(k).get_d() == doctest::Approx(v).epsilon(1e-9));
        double s = trapezoid([k](double x) { return std::pow(x, k) * semicircle_density(x); }, -2, 2, 200000);
        CHECK(semicircle_moment(k).get_d() == doctest::Approx(s).epsilon(1e-5));
    }
}

TEST_CASE("limit shape values") {
    CHECK(omega(0) == doctest::Approx(4 / std::numbers::pi));
    CHECK(omega(2) == 2);
    CHECK(omega(-2) == 2);
    CHECK(omega(3.5) == 3.5);
    CHECK(omega(2 - 1e-13) == doctest::Approx(2).epsilon(1e-12));
    CHECK(trapezoid(semicircle_density, -2, 2, 100000) == doctest::Approx(1).epsilon(1e-6));
}

TEST_CASE("chebyshev and hermite") {
    CHECK(chebyshev_u(2) == Polynomial({-1, 0, 1}));
    CHECK(chebyshev_t(3) == Polynomial({0, -3, 0, 1}));
    CHECK(hermite_mod(2) == Polynomial({-1, 0, 1}));
    for (int k = 0; k <= 8; ++k)
        for (double th : {0.3, 1.1, 2.5}) {
            double x = 2 * std::cos(th);
            CHECK(chebyshev_u(k)(x) == doctest::Approx(std::sin((k + 1) * th) / std::sin(th)));
            if (k >= 1) CHECK(chebyshev_t(k)(x) == doctest::Approx(2 * std::cos(k * th)));
        }
    // orthogonality under N(0,1): E[H_m H_l] = m! [m = l], with E x^{2j} = (2j-1)!!
    auto gauss = [](const Polynomial& p) {
        Rational s = 0, dfact = 1;
        for (int i = 0; i <= p.degree(); i += 2) {
            if (i > 0) dfact *= i - 1;
            s += p.coeff(i) * dfact;
        }
        return s;
    };
    Rational fact = 1;
    for (int m = 0; m <= 7; ++m) {
        if (m > 0) fact *= m;
        for (int l = 0; l <= 7; ++l) CHECK(gauss(hermite_mod(m) * hermite_mod(l)) == (m == l ? fact : Rational(0)));
    }
}

TEST_CASE("fluctuation functionals") {
    for (const auto& l : diagrams_up_to(9)) {
        if (l.empty()) continue;
        auto f = fluctuation_functionals(l, 5);
        CHECK(f.q[1] == 0);
        CHECK(f.t[1] == 0);
        CHECK(f.t[2] == 0);
        CHECK(f.u[0] == 0);
        const double n = l.size();
        for (int k = 2; k <= 5; ++k)
            CHECK(f.eta[k] == doctest::Approx(eval_psharp({k}, l).get_d() / std::sqrt(k * std::pow(n, k))));
        for (int k = 1; k <= 5; ++k) {
            double want = eval_ptilde(k + 1, l).get_d() - (k % 2 ? omega_moment(k + 1).get_d() * std::pow(n, (k + 1) / 2.0) : 0);
            CHECK(f.q[k] == doctest::Approx(want / ((k + 1) * std::pow(n, k / 2.0))));
        }
    }
    CHECK_THROWS(fluctuation_functionals(Y({2, 1}), 1));
}

TEST_CASE("moments of Delta are q_{k+1}/(k+1)") {
    auto l = Y({3, 2, 1});
    const double n = l.size();
    auto f = fluctuation_functionals(l, 5);
    for (int k = 0; k <= 4; ++k) {
        auto integrand = [&](double x) {
            return std::sqrt(n) * (rescaled_profile_value(l, x) - omega(x)) / 2 * std::pow(x, k);
        };
        double v = trapezoid(integrand, -4, 4, 400000);
        CHECK(v == doctest::Approx(f.q[k + 1] / (k + 1)).epsilon(1e-6).scale(1));
    }
}

TEST_CASE("identity groups: observables") {
    auto r = run_identities({}, {"ptilde-in-p", "phi", "residue", "conjugation", "transition", "scaling"});
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.first_failure);
        CHECK(c.pass());
    }
}
