#include "kerov/theorems.hpp"

#include "kerov/algebra.hpp"
#include "kerov/polynomial.hpp"
#include "kerov/series.hpp"

#include <stdexcept>

namespace kerov {

bool TheoremReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

ExtendedElement scaled_hermite(int k, int m) {
    Polynomial h = hermite_mod(m);
    ExtendedElement x = xi(k);
    ExtendedElement out;
    ExtendedElement xp = ExtendedElement::constant(1);
    for (int i = 0; i <= m; ++i) {
        if (i > 0) xp = ext_multiply(xp, x);
        if (h.coeff(i) == 0) continue;
        out += xp * Rational(h.coeff(i) * power(BigInt(k), (m - i) / 2));
    }
    return out;
}

namespace {

Observable psharp_generator_in_ptilde(int k) {
    return to_basis(Observable::generator(Basis::psharp, k), Basis::ptilde);
}

// sum over partitions mu of k with parts >= 2 of k^{falling (l(mu) + shift)} / prod m_i! prod p#_{i-1}^{m_i}
Observable psharp_monomial_sum(int k, int shift) {
    Observable out(Basis::ptilde);
    for (const auto& mu : partitions_of(k)) {
        if (multiplicity(mu, 1) > 0) continue;
        const int l = static_cast<int>(mu.size());
        Rational c(falling_factorial(k, l + shift));
        Observable prod = Observable::constant(Basis::ptilde, 1);
        for (size_t i = 0; i < mu.size();) {
            size_t j = i;
            while (j < mu.size() && mu[j] == mu[i]) ++j;
            c /= Rational(factorial(j - i));
            prod = prod * power(psharp_generator_in_ptilde(mu[i] - 1), static_cast<int>(j - i));
            i = j;
        }
        out += prod * c;
    }
    return out;
}

TheoremCheck weight_check(std::string statement, const Observable& remainder, int bound) {
    TheoremCheck c;
    c.statement = std::move(statement);
    c.filtration = "weight";
    c.bound = bound;
    c.remainder_degree = weight_degree(remainder);
    c.pass = !c.remainder_degree || *c.remainder_degree < bound;
    return c;
}

TheoremCheck deg1_check(std::string statement, const ExtendedElement& remainder) {
    TheoremCheck c;
    c.statement = std::move(statement);
    c.filtration = "deg1";
    c.bound = 0;
    c.remainder_degree = remainder.deg1();
    c.pass = !c.remainder_degree || *c.remainder_degree < 0;
    return c;
}

std::string idx(const std::string& name, int k) { return name + ", k=" + std::to_string(k); }

}  // namespace

TheoremReport leading_term_checks(int kmax) {
    if (kmax > algebra_caps().theorem_index)
        throw CapExceeded("leading-term checks: index " + std::to_string(kmax) + " exceeds cap " +
                          std::to_string(algebra_caps().theorem_index));
    TheoremReport rep;

    // top weight component of p#_k: weight k+1, equal to -1/k [t^{k+1}] exp(-k sum p~_j t^j / j)
    for (int k = 1; k <= kmax; ++k) {
        Observable sharp = psharp_generator_in_ptilde(k);
        FormalSeries<Observable> s(k + 1, Observable(Basis::ptilde));
        for (int j = 2; j <= k + 1; ++j) s[j] = Observable::generator(Basis::ptilde, j) * Rational(-k, j);
        Observable lead = s.exp()[k + 1] * Rational(-1, k);
        auto c = weight_check(idx("top weight of p#_k (generating form)", k), sharp - lead, k + 1);
        c.pass = c.pass && weight_degree(sharp) == k + 1 &&
                 lead.coefficient({k + 1}) == Rational(1, k + 1);
        rep.checks.push_back(c);
    }
    // p~_k through p#_{j-1}, within lower weight
    for (int k = 2; k <= kmax; ++k) {
        Observable rem = Observable::generator(Basis::ptilde, k) - psharp_monomial_sum(k, 0);
        rep.checks.push_back(weight_check(idx("p~_k in terms of p#", k), rem, k));
    }
    // h~_k through p#_{j-1}, within lower weight
    for (int k = 2; k <= kmax; ++k) {
        Observable h = to_basis(Observable::generator(Basis::htilde, k), Basis::ptilde);
        rep.checks.push_back(weight_check(idx("h~_k in terms of p#", k), h - psharp_monomial_sum(k, -1), k));
    }
    // top weight component of p#_k equals f~_{k+1}
    for (int k = 1; k <= kmax; ++k) {
        Observable top = top_weight_component(Observable::generator(Basis::psharp, k));
        Observable f = to_basis(Observable::generator(Basis::ftilde, k + 1), Basis::ptilde);
        TheoremCheck c;
        c.statement = idx("top weight of p#_k equals f~_{k+1}", k);
        c.filtration = "weight";
        c.bound = k + 1;
        c.exact = true;
        c.remainder_degree = weight_degree(top - f);
        c.pass = top == f;
        rep.checks.push_back(c);
    }
    // eta_rho against Hermite products
    for (int r = 1; r <= kmax; ++r)
        for (const auto& rho : partitions_of(r)) {
            ExtendedElement rhs = ExtendedElement::constant(1);
            for (int k = 2; k <= r; ++k) {
                int m = multiplicity(rho, k);
                if (m) rhs = ext_multiply(rhs, scaled_hermite(k, m));
            }
            rep.checks.push_back(deg1_check("eta_rho Hermite product, rho=" + to_string(rho), eta_unscaled(rho) - rhs));
        }
    // q_k through p#_{k-2j} / (p#_1)^{(k-2j)/2}
    for (int k = 2; k <= kmax; ++k) {
        ExtendedElement rem = ext_q(k);
        for (int j = 0; 2 * j <= k - 2; ++j) rem -= xi(k - 2 * j) * Rational(binomial(k, j));
        rep.checks.push_back(deg1_check(idx("q_k expansion", k), rem));
    }
    // and its inverse
    for (int k = 2; k <= kmax; ++k) {
        ExtendedElement rem = xi(k);
        for (int j = 0; 2 * j <= k - 2; ++j) {
            Rational c(binomial(k - j, j) * k, k - j);
            c.canonicalize();
            rem -= ext_q(k - 2 * j) * (j % 2 ? -c : c);
        }
        rep.checks.push_back(deg1_check(idx("p#_k / (p#_1)^{k/2} through q", k), rem));
    }
    // g_k through p#_{k-1-2j}
    for (int k = 3; k <= kmax; ++k) {
        ExtendedElement rem = ext_g(k);
        for (int j = 0; 2 * j <= k - 3; ++j) rem -= xi(k - 1 - 2 * j) * Rational(binomial(k, j));
        rep.checks.push_back(deg1_check(idx("g_k expansion", k), rem));
    }
    // and its inverse, g_0 = g_1 = g_2 = 0
    for (int k = 3; k <= kmax; ++k) {
        ExtendedElement rem = xi(k - 1);
        for (int j = 0; 2 * j <= k; ++j) {
            if (k - 2 * j < 3) continue;
            Rational c(binomial(k - j, j) * k, k - j);
            c.canonicalize();
            rem -= ext_g(k - 2 * j) * (j % 2 ? -c : c);
        }
        rep.checks.push_back(deg1_check(idx("p#_{k-1} / (p#_1)^{(k-1)/2} through g", k), rem));
    }
    return rep;
}

TheoremReport verify_leading_term_theorems(int kmax) {
    auto rep = leading_term_checks(kmax);
    for (const auto& c : rep.checks)
        if (!c.pass) throw std::runtime_error("leading-term statement fails: " + c.statement);
    return rep;
}

}  // namespace kerov
