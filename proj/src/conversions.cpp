#include "kerov/algebra.hpp"
#include "kerov/generating.hpp"
#include "kerov/observables.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace kerov {

AlgebraCaps& algebra_caps() {
    static AlgebraCaps caps;
    return caps;
}

namespace {

// memo tables keyed by an index; values never change once computed
template <class Key, class Value>
class Memo {
public:
    template <class F>
    Value get(const Key& k, F&& make) {
        {
            std::lock_guard lock(mu_);
            auto it = table_.find(k);
            if (it != table_.end()) return it->second;
        }
        Value v = make();
        std::lock_guard lock(mu_);
        return table_.try_emplace(k, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, Value> table_;
};

std::vector<Observable> generators(Basis b, int kmax) {
    std::vector<Observable> g(kmax + 1, Observable(b));
    for (int k = 1; k <= kmax; ++k) g[k] = Observable::generator(b, k);
    return g;
}

// replace each generator index k by image(k), multiplying out in the target basis
Observable substitute(const Observable& e, Basis target, const std::function<Observable(int)>& image) {
    Observable out(target);
    std::map<int, std::vector<Observable>> powers;
    auto pow_of = [&](int k, int m) -> const Observable& {
        auto& v = powers[k];
        if (v.empty()) v.push_back(Observable::constant(target, 1));
        while (static_cast<int>(v.size()) <= m) v.push_back(v.back() * image(k));
        return v[m];
    };
    for (const auto& [key, c] : e.terms()) {
        Observable t = Observable::constant(target, c);
        for (size_t i = 0; i < key.size();) {
            size_t j = i;
            while (j < key.size() && key[j] == key[i]) ++j;
            t = t * pow_of(key[i], static_cast<int>(j - i));
            i = j;
        }
        out += t;
    }
    return out;
}

}  // namespace

Observable ptilde_in_p(int k) {
    if (k < 1) throw std::invalid_argument("ptilde_in_p: k >= 1");
    Observable e(Basis::p);
    for (int j = 0; 2 * j + 1 <= k; ++j) {
        int idx = k - 1 - 2 * j;
        if (idx < 1) continue;  // p_0 is taken to be 0
        Rational c(binomial(k, 2 * j + 1), power(BigInt(2), 2 * j));
        c.canonicalize();
        e.add_term({idx}, c);
    }
    return e;
}

Observable p_in_ptilde(int k) {
    static Memo<int, Observable> memo;
    return memo.get(k, [k] {
        if (k < 1) throw std::invalid_argument("p_in_ptilde: k >= 1");
        // p~_{k+1} = (k+1) p_k + sum_{j>=1} C(k+1,2j+1) 2^{-2j} p_{k-2j}
        Observable e = Observable::generator(Basis::ptilde, k + 1);
        for (int j = 1; k - 2 * j >= 1; ++j) {
            Rational c(binomial(k + 1, 2 * j + 1), power(BigInt(2), 2 * j));
            c.canonicalize();
            e -= p_in_ptilde(k - 2 * j) * c;
        }
        return e * Rational(1, k + 1);
    });
}

Observable psharp_in_p(int k) {
    static Memo<int, Observable> memo;
    return memo.get(k, [k] {
        if (k < 1) throw std::invalid_argument("psharp_in_p: k >= 1");
        return psharp_cycle_from_power_sums(k, generators(Basis::p, k), Observable(Basis::p));
    });
}

Observable htilde_in_ptilde(int k) {
    static Memo<int, Observable> memo;
    return memo.get(k, [k] {
        if (k < 2) throw std::invalid_argument("htilde_in_ptilde: k >= 2");
        return moments_from_ptilde(generators(Basis::ptilde, k), k, Observable(Basis::ptilde))[k];
    });
}

Observable ptilde_in_htilde(int k) {
    static Memo<int, Observable> memo;
    return memo.get(k, [k] {
        if (k < 2) throw std::invalid_argument("ptilde_in_htilde: k >= 2");
        return ptilde_from_moments(generators(Basis::htilde, k), k, Observable(Basis::htilde))[k];
    });
}

std::vector<Observable> free_cumulant_series(int kmax) {
    if (kmax < 2) throw std::invalid_argument("free_cumulant_series: kmax >= 2");
    return free_cumulants_from_moments(generators(Basis::htilde, kmax), kmax, Observable(Basis::htilde));
}

namespace {

Observable ftilde_in_htilde(int k) {
    static Memo<int, Observable> memo;
    return memo.get(k, [k] { return free_cumulant_series(k)[k]; });
}

}  // namespace

Observable htilde_in_ftilde(int k) {
    static Memo<int, Observable> memo;
    return memo.get(k, [k] {
        if (k < 2) throw std::invalid_argument("htilde_in_ftilde: k >= 2");
        return moments_from_free_cumulants(generators(Basis::ftilde, k), k, Observable(Basis::ftilde))[k];
    });
}

// -- evaluation fitting for p#_rho

namespace {

struct FitSystem {
    std::vector<Partition> unknowns;
    std::vector<YoungDiagram> points;
    std::vector<std::vector<Rational>> values;  // values[point][unknown] = p_mu(point)
    std::vector<size_t> pivot_rows;
    std::vector<std::vector<Rational>> inverse;  // of the pivot-row submatrix
};

FitSystem build_fit_system(int r) {
    FitSystem s;
    s.unknowns = partitions_up_to(r);
    s.points = diagrams_up_to(r + 2);
    const size_t nu = s.unknowns.size();
    for (const auto& lambda : s.points) {
        auto p = power_sums(lambda, std::max(r, 1));
        std::vector<Rational> row(nu);
        for (size_t j = 0; j < nu; ++j) {
            Rational v = 1;
            for (int part : s.unknowns[j]) v *= p[part];
            row[j] = v;
        }
        s.values.push_back(std::move(row));
    }

    // pick independent rows column by column
    auto work = s.values;
    std::vector<char> used(work.size(), 0);
    for (size_t c = 0; c < nu; ++c) {
        size_t piv = work.size();
        for (size_t i = 0; i < work.size(); ++i)
            if (!used[i] && work[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == work.size())
            throw std::runtime_error("singular fit system for |rho| <= " + std::to_string(r) + ": enlarge the evaluation set");
        used[piv] = 1;
        s.pivot_rows.push_back(piv);
        for (size_t i = 0; i < work.size(); ++i) {
            if (used[i] || work[i][c] == 0) continue;
            Rational f = work[i][c] / work[piv][c];
            for (size_t j = c; j < nu; ++j) work[i][j] -= f * work[piv][j];
        }
    }

    // Gauss-Jordan inverse of the square pivot submatrix
    std::vector<std::vector<Rational>> m(nu), inv(nu, std::vector<Rational>(nu));
    for (size_t i = 0; i < nu; ++i) {
        m[i] = s.values[s.pivot_rows[i]];
        inv[i][i] = 1;
    }
    for (size_t c = 0; c < nu; ++c) {
        size_t piv = c;
        while (piv < nu && m[piv][c] == 0) ++piv;
        if (piv == nu) throw std::runtime_error("singular fit submatrix");
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        Rational d = m[c][c];
        for (size_t j = 0; j < nu; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (size_t i = 0; i < nu; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = 0; j < nu; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    s.inverse = std::move(inv);
    return s;
}

const FitSystem& fit_system(int r) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FitSystem>> systems;
    std::lock_guard lock(mu);
    auto& slot = systems[r];
    if (!slot) slot = std::make_unique<FitSystem>(build_fit_system(r));
    return *slot;
}

}  // namespace

Observable psharp_rho_in_p(const Partition& rho_in) {
    static Memo<Partition, Observable> memo;
    Partition rho = canonical(rho_in);
    const int r = size(rho);
    if (r > algebra_caps().structure_boxes)
        throw CapExceeded("psharp_rho_in_p: |rho| = " + std::to_string(r) + " exceeds cap " + std::to_string(algebra_caps().structure_boxes));
    return memo.get(rho, [&] {
        const FitSystem& s = fit_system(r);
        const size_t nu = s.unknowns.size();
        std::vector<Rational> rhs(s.points.size());
        for (size_t i = 0; i < s.points.size(); ++i) rhs[i] = eval_psharp(rho, s.points[i]);
        std::vector<Rational> coef(nu);
        for (size_t i = 0; i < nu; ++i)
            for (size_t j = 0; j < nu; ++j)
                if (s.inverse[i][j] != 0) coef[i] += s.inverse[i][j] * rhs[s.pivot_rows[j]];
        for (size_t i = 0; i < s.points.size(); ++i) {
            Rational v = 0;
            for (size_t j = 0; j < nu; ++j) v += s.values[i][j] * coef[j];
            if (v != rhs[i]) throw std::runtime_error("fit for p#" + to_string(rho) + " inconsistent on " + s.points[i].to_string());
        }
        Observable e(Basis::p);
        for (size_t j = 0; j < nu; ++j) e.add_term(s.unknowns[j], coef[j]);
        return e;
    });
}

// -- basis changes

namespace {

Observable to_p(const Observable& e) {
    switch (e.basis()) {
    case Basis::p: return e;
    case Basis::ptilde: return substitute(e, Basis::p, ptilde_in_p);
    case Basis::htilde: return to_p(substitute(e, Basis::ptilde, htilde_in_ptilde));
    case Basis::ftilde: return to_p(substitute(e, Basis::htilde, ftilde_in_htilde));
    case Basis::psharp: {
        Observable out(Basis::p);
        for (const auto& [rho, c] : e.terms()) out += psharp_rho_in_p(rho) * c;
        return out;
    }
    }
    throw std::logic_error("unreachable");
}

Observable p_to_psharp(Observable rem) {
    Observable out(Basis::psharp);
    // p#_mu = p_mu + lower degree, so peel off the leading term each time
    while (!rem.is_zero()) {
        auto it = rem.terms().begin();
        Partition mu = it->first;
        Rational c = it->second;
        out.add_term(mu, c);
        rem -= psharp_rho_in_p(mu) * c;
    }
    return out;
}

Observable from_p(const Observable& x, Basis target) {
    switch (target) {
    case Basis::p: return x;
    case Basis::ptilde: return substitute(x, Basis::ptilde, p_in_ptilde);
    case Basis::htilde: return substitute(from_p(x, Basis::ptilde), Basis::htilde, ptilde_in_htilde);
    case Basis::ftilde: return substitute(from_p(x, Basis::htilde), Basis::ftilde, htilde_in_ftilde);
    case Basis::psharp: return p_to_psharp(x);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Observable to_basis(const Observable& e, Basis target) {
    if (e.basis() == target) return e;
    return from_p(to_p(e), target);
}

Rational eval(const Observable& e, const YoungDiagram& lambda) {
    if (e.is_zero()) return 0;
    int kmax = 1;
    for (const auto& [key, c] : e.terms())
        for (int k : key) kmax = std::max(kmax, k);

    if (e.basis() == Basis::psharp) {
        Rational acc = 0;
        for (const auto& [rho, c] : e.terms()) acc += c * eval_psharp(rho, lambda);
        return acc;
    }
    std::vector<Rational> v;
    switch (e.basis()) {
    case Basis::p: v = power_sums(lambda, kmax); break;
    case Basis::ptilde: v = ptilde_values(lambda, kmax); break;
    case Basis::htilde: {
        auto mu = transition_measure(lambda);
        v.resize(kmax + 1);
        for (int k = 2; k <= kmax; ++k) v[k] = mu.moment(k);
        break;
    }
    case Basis::ftilde: v = free_cumulants(lambda, std::max(kmax, 2)); break;
    case Basis::psharp: break;
    }
    Rational acc = 0;
    for (const auto& [key, c] : e.terms()) {
        Rational t = c;
        for (int k : key) t *= v[k];
        acc += t;
    }
    return acc;
}

// -- weight grading

std::optional<int> weight_degree(const Observable& e) {
    Observable x = to_basis(e, Basis::ptilde);
    if (x.is_zero()) return std::nullopt;
    return x.degree();
}

Observable top_weight_component(const Observable& e) {
    Observable x = to_basis(e, Basis::ptilde);
    Observable out(Basis::ptilde);
    int w = x.degree();
    for (const auto& [key, c] : x.terms())
        if (size(key) == w) out.add_term(key, c);
    return out;
}

// -- Lagrange inversion

LagrangeInversion lagrange_invert(const RationalSeries& b) {
    const int n = b.order();
    if (b[0] != 1 || (n >= 1 && b[1] != 0)) throw std::invalid_argument("lagrange_invert: B must start 1 + 0 u + ...");
    LagrangeInversion out{RationalSeries::one(n, Rational(0)), RationalSeries(n, Rational(0))};
    for (int k = 2; k <= n; ++k) {
        out.a[k] = b.pow(Rational(k + 1))[k] / Rational(k + 1);
        out.a_tilde[k] = b.pow(Rational(k))[k];
    }
    return out;
}

RationalSeries lagrange_b_from_a(const RationalSeries& a) {
    const int n = a.order();
    if (a[0] != 1 || (n >= 1 && a[1] != 0)) throw std::invalid_argument("lagrange_b_from_a: A must start 1 + 0 t + ...");
    auto b = RationalSeries::one(n, Rational(0));
    for (int k = 2; k <= n; ++k) b[k] = -a.pow(Rational(-(k - 1)))[k] / Rational(k - 1);
    return b;
}

bool lagrange_compose_identity(const RationalSeries& a, const RationalSeries& b) {
    const int n = a.order();
    RationalSeries x(n, Rational(0));  // t A(t)
    for (int i = 1; i <= n; ++i) x[i] = a[i - 1];
    auto binv = b.pow(Rational(-1));
    RationalSeries y(n, Rational(0));  // s / B(s)
    for (int i = 1; i <= n; ++i) y[i] = binv[i - 1];
    auto composed = y.compose(x);
    RationalSeries t(n, Rational(0));
    if (n >= 1) t[1] = 1;
    return composed == t;
}

std::vector<Rational> combinatorial_invert(const std::vector<Rational>& a) {
    std::vector<Rational> b(a.size());
    for (size_t k = 0; k < a.size(); ++k) {
        if (k < 2) {
            b[k] = a[k];
            continue;
        }
        for (size_t j = 0; 2 * j <= k; ++j) {
            Rational c(binomial(k - j, j) * k, k - j);
            c.canonicalize();
            b[k] += (j % 2 ? -c : c) * a[k - 2 * j];
        }
    }
    return b;
}

std::vector<Rational> combinatorial_forward(const std::vector<Rational>& b) {
    std::vector<Rational> a(b.size());
    for (size_t k = 0; k < b.size(); ++k)
        for (size_t j = 0; 2 * j <= k; ++j) a[k] += Rational(binomial(k, j)) * b[k - 2 * j];
    return a;
}

}  // namespace kerov
