#include "kerov/identities.hpp"

#include "kerov/algebra.hpp"
#include "kerov/characters.hpp"
#include "kerov/generating.hpp"
#include "kerov/observables.hpp"
#include "kerov/plancherel.hpp"
#include "kerov/polynomial.hpp"
#include "kerov/rng.hpp"
#include "kerov/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace kerov {

bool IdentityReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass()) return false;
    return !checks.empty();
}

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json j;
    for (const auto& c : checks) {
        nlohmann::json e = {{"group", c.group}, {"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"pass", c.pass()}};
        if (!c.first_failure.empty()) e["first_failure"] = c.first_failure;
        j["checks"].push_back(e);
    }
    j["pass"] = all_pass();
    return j;
}

namespace {

using Checks = std::vector<IdentityCheck>;

class Recorder {
public:
    Recorder(Checks& out, std::string group, std::string name) : out_(out) {
        c_.group = std::move(group);
        c_.name = std::move(name);
    }
    ~Recorder() { out_.push_back(c_); }

    void expect(bool ok, const std::function<std::string()>& what) {
        ++c_.cases;
        if (ok) return;
        if (c_.failures++ == 0) c_.first_failure = what();
    }

private:
    Checks& out_;
    IdentityCheck c_;
};

std::string at(const YoungDiagram& l) { return "lambda=" + l.to_string(); }
std::string at(const YoungDiagram& l, int k) { return at(l) + ", k=" + std::to_string(k); }

Rational pow_q(const Rational& x, int k) {
    return k >= 0 ? power(x, k) : Rational(1) / power(x, -k);
}

// partitions with every part >= 1 and size in [1, n]
std::vector<Partition> nonempty_partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int r = 1; r <= n; ++r)
        for (auto& p : partitions_of(r)) out.push_back(p);
    return out;
}

// Euler's pentagonal recurrence, independent of the enumerator
std::vector<long> partition_counts(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > m) break;
            long s = (j % 2) ? 1 : -1;
            p[m] += s * p[m - g1];
            if (g2 <= m) p[m] += s * p[m - g2];
        }
    return p;
}

// -- groups

void partitions_group(Checks& out) {
    const int N = 12;
    const auto ys = diagrams_up_to(N);
    {
        Recorder r(out, "partitions", "enumeration counts match the pentagonal recurrence, n <= 20");
        auto p = partition_counts(20);
        for (int n = 0; n <= 20; ++n)
            r.expect(static_cast<long>(enumerate_partitions(n).size()) == p[n], [&] { return "n=" + std::to_string(n); });
    }
    {
        Recorder r(out, "partitions", "conjugation is an involution and swaps Frobenius a, b");
        for (const auto& l : ys) {
            auto f = frobenius_coords(l), g = frobenius_coords(l.conjugate());
            long s = 0;
            for (int i = 0; i < f.rank(); ++i) s += f.twice_a[i] + f.twice_b[i];
            r.expect(l.conjugate().conjugate() == l && f.twice_a == g.twice_b && f.twice_b == g.twice_a && s == 2L * l.size(),
                     [&] { return at(l); });
        }
    }
    {
        Recorder r(out, "partitions", "from_extrema inverts profile_extrema; conjugation reverses and negates extrema");
        for (const auto& l : ys) {
            auto e = profile_extrema(l), c = profile_extrema(l.conjugate());
            std::vector<int> mn, mx;
            for (auto it = e.minima.rbegin(); it != e.minima.rend(); ++it) mn.push_back(-*it);
            for (auto it = e.maxima.rbegin(); it != e.maxima.rend(); ++it) mx.push_back(-*it);
            long sum = 0;
            for (int x : e.minima) sum += x;
            for (int y : e.maxima) sum -= y;
            r.expect(from_extrema(e) == l && c.minima == mn && c.maxima == mx && sum == 0, [&] { return at(l); });
        }
    }
    {
        Recorder r(out, "partitions", "L(lambda) and -L(lambda') partition the half-integers");
        for (const auto& l : ys) {
            const int w = l.size() + 2;
            std::set<int> L, Lc;  // doubled half-integers
            for (int i = 1; i <= w + l.length(); ++i) L.insert(2 * (l.row(i - 1) - i) + 1);
            auto c = l.conjugate();
            for (int i = 1; i <= w + c.length(); ++i) Lc.insert(-(2 * (c.row(i - 1) - i) + 1));
            bool ok = true;
            for (int h = -2 * w + 1; h <= 2 * w - 1; h += 2) ok = ok && (L.count(h) + Lc.count(h) == 1);
            r.expect(ok, [&] { return at(l); });
        }
    }
    {
        Recorder r(out, "partitions", "profile is 1-Lipschitz, equals |x| far out, and encloses area 2|lambda|");
        for (const auto& l : ys) {
            auto e = profile_extrema(l);
            bool ok = true;
            double prev = profile_value(l, -l.size() - 3.0);
            ok = ok && prev == l.size() + 3.0;
            for (double x = -l.size() - 2.75; x <= l.size() + 3; x += 0.25) {
                double v = profile_value(l, x);
                ok = ok && std::abs(v - prev) <= 0.25;
                prev = v;
            }
            std::vector<int> corners;
            for (size_t i = 0; i < e.minima.size(); ++i) {
                corners.push_back(e.minima[i]);
                if (i < e.maxima.size()) corners.push_back(e.maxima[i]);
            }
            double area = 0;
            for (size_t i = 1; i < corners.size(); ++i)
                area += (profile_value(l, corners[i - 1]) + profile_value(l, corners[i])) / 2 * (corners[i] - corners[i - 1]);
            double a = corners.front(), b = corners.back();
            area -= (a * a + b * b) / 2;
            r.expect(ok && area == 2.0 * l.size(), [&] { return at(l); });
        }
    }
}

void characters_group(Checks& out) {
    {
        Recorder r(out, "characters", "sum of dim^2 over Y_n equals n!, n <= 12");
        for (int n = 0; n <= 12; ++n) {
            BigInt s = 0;
            for (const auto& l : enumerate_partitions(n)) s += dimension(l) * dimension(l);
            r.expect(s == factorial(n), [&] { return "n=" + std::to_string(n); });
        }
    }
    {
        Recorder r(out, "characters", "column orthogonality and chi at (1^n) = dim, n <= 8");
        for (int n = 1; n <= 8; ++n) {
            auto ls = enumerate_partitions(n);
            auto rs = partitions_of(n);
            for (const auto& l : ls) r.expect(character(l, ones(n)) == dimension(l), [&] { return at(l); });
            for (const auto& a : rs)
                for (const auto& b : rs) {
                    BigInt s = 0;
                    for (const auto& l : ls) s += character(l, a) * character(l, b);
                    BigInt want = a == b ? BigInt(z_factor(a)) : BigInt(0);
                    r.expect(s == want, [&] { return to_string(a) + " vs " + to_string(b); });
                }
        }
    }
    {
        Recorder r(out, "characters", "chi^{lambda'} = sign(rho) chi^lambda, n <= 8");
        for (int n = 1; n <= 8; ++n)
            for (const auto& l : enumerate_partitions(n))
                for (const auto& rho : partitions_of(n))
                    r.expect(character(l.conjugate(), rho) == sign(rho) * character(l, rho), [&] { return at(l) + " rho=" + to_string(rho); });
    }
}

void ptilde_group(Checks& out, const IdentityCaps& caps) {
    const auto ys = diagrams_up_to(caps.diagram_boxes);
    Recorder r(out, "ptilde-in-p", "p~_k = sum_j C(k,2j+1) 2^{-2j} p_{k-1-2j} with p_0 = 0, pointwise and symbolic");
    for (const auto& l : ys) {
        r.expect(eval_ptilde(1, l) == 0 && eval_ptilde(2, l) == Rational(2 * l.size()), [&] { return at(l); });
        for (int k = 2; k <= caps.index; ++k) {
            Rational s = 0;
            for (int j = 0; k - 1 - 2 * j >= 1; ++j)
                s += Rational(binomial(k, 2 * j + 1)) / Rational(power(BigInt(4), j)) * eval_p(k - 1 - 2 * j, l);
            r.expect(s == eval_ptilde(k, l) && eval(ptilde_in_p(k), l) == s, [&] { return at(l, k); });
        }
    }
}

void phi_group(Checks& out, const IdentityCaps& caps) {
    const auto ys = diagrams_up_to(caps.diagram_boxes);
    auto from_roots = [](const std::vector<Rational>& roots) {
        Polynomial p = Polynomial::constant(1);
        for (const auto& x : roots) p = p * Polynomial::linear_root(x);
        return p;
    };
    // reduce num/den to lowest terms with monic denominator
    auto reduce = [](Polynomial num, Polynomial den) {
        Polynomial g = gcd(num, den);
        num = divmod(num, g).first;
        den = divmod(den, g).first;
        Rational lc = den.leading();
        return std::make_pair(num * (Rational(1) / lc), den * (Rational(1) / lc));
    };
    {
        Recorder r(out, "phi", "row product for Phi(z) equals the Frobenius form, which is incontractible");
        for (const auto& l : ys) {
            std::vector<Rational> rn, rd, fn, fd;
            for (int i = 1; i <= l.length(); ++i) {
                rn.push_back(-(Rational(i) - Rational(1, 2)));
                rd.push_back(Rational(l.row(i - 1) - i) + Rational(1, 2));
            }
            auto f = frobenius_coords(l);
            for (int i = 0; i < f.rank(); ++i) {
                fn.push_back(-f.b(i));
                fd.push_back(f.a(i));
            }
            auto a = reduce(from_roots(rn), from_roots(rd));
            Polynomial n2 = from_roots(fn), d2 = from_roots(fd);
            r.expect(a.first == n2 && a.second == d2 && gcd(n2, d2).degree() == 0, [&] { return at(l); });
        }
    }
    {
        Recorder r(out, "phi", "Phi(z-1/2)/Phi(z+1/2) = z prod(z-y_j)/prod(z-x_i) as reduced rational functions");
        for (const auto& l : ys) {
            auto f = frobenius_coords(l);
            const Rational h(1, 2);
            std::vector<Rational> num, den;  // N(z-1/2) D(z+1/2) over D(z-1/2) N(z+1/2)
            for (int i = 0; i < f.rank(); ++i) {
                num.push_back(h - f.b(i));
                num.push_back(f.a(i) - h);
                den.push_back(f.a(i) + h);
                den.push_back(-h - f.b(i));
            }
            auto lhs = reduce(from_roots(num), from_roots(den));
            auto e = profile_extrema(l);
            std::vector<Rational> rn{Rational(0)}, rd;
            for (int y : e.maxima) rn.emplace_back(y);
            for (int x : e.minima) rd.emplace_back(x);
            auto rhs = reduce(from_roots(rn), from_roots(rd));
            r.expect(lhs == rhs, [&] { return at(l); });
        }
    }
}

void residue_group(Checks& out, const IdentityCaps& caps) {
    const auto ys = diagrams_up_to(caps.diagram_boxes);
    {
        Recorder r(out, "residue", "residue route equals character route for p#_k");
        for (const auto& l : ys)
            for (int k = 1; k <= caps.residue_index; ++k)
                r.expect(eval_psharp_residue(k, l) == eval_psharp({k}, l), [&] { return at(l, k); });
    }
    {
        Recorder r(out, "residue", "generating-series expansion of p#_k in p evaluates to the character route, k <= 6");
        for (int k = 1; k <= std::min(6, caps.index); ++k) {
            Observable e = psharp_in_p(k);
            for (const auto& l : ys) r.expect(eval(e, l) == eval_psharp({k}, l), [&] { return at(l, k); });
        }
    }
}

void exact_relation_group(Checks& out, const IdentityCaps& caps) {
    const auto ys = diagrams_up_to(caps.diagram_boxes);
    {
        Recorder r(out, "exact-relation", "p#_{sigma u 1} = (p#_1 - |sigma|) p#_sigma pointwise");
        for (const auto& s : nonempty_partitions_up_to(caps.index - 1))
            for (const auto& l : ys)
                r.expect(eval_psharp(join(s, {1}), l) == Rational(l.size() - size(s)) * eval_psharp(s, l),
                         [&] { return at(l) + " sigma=" + to_string(s); });
    }
    {
        Recorder r(out, "exact-relation", "p#_sigma p#_1 = p#_{sigma u 1} + |sigma| p#_sigma symbolically");
        for (const auto& s : nonempty_partitions_up_to(algebra_caps().structure_boxes - 1)) {
            Expansion want;
            want[canonical(join(s, {1}))] = 1;
            want[s] = size(s);
            r.expect(structure_constants(s, {1}) == want, [&] { return "sigma=" + to_string(s); });
        }
    }
}

void conjugation_group(Checks& out, const IdentityCaps& caps) {
    const auto ys = diagrams_up_to(caps.diagram_boxes);
    Recorder r(out, "conjugation", "p_k, p~_k and p#_rho transform with the stated signs under conjugation");
    const auto rhos = nonempty_partitions_up_to(caps.index);
    for (const auto& l : ys) {
        auto c = l.conjugate();
        for (int k = 1; k <= caps.index; ++k) {
            int sp = (k - 1) % 2 ? -1 : 1, st = k % 2 ? -1 : 1;
            r.expect(eval_p(k, c) == Rational(sp) * eval_p(k, l) && eval_ptilde(k, c) == Rational(st) * eval_ptilde(k, l),
                     [&] { return at(l, k); });
        }
        for (const auto& rho : rhos) {
            int s = (size(rho) + static_cast<int>(rho.size())) % 2 ? -1 : 1;
            r.expect(eval_psharp(rho, c) == Rational(s) * eval_psharp(rho, l), [&] { return at(l) + " rho=" + to_string(rho); });
        }
    }
}

void transition_group(Checks& out, const IdentityCaps& caps) {
    const auto ys = diagrams_up_to(caps.diagram_boxes);
    {
        Recorder r(out, "transition", "atoms sit at the minima with positive masses, total 1, first moment 0");
        for (const auto& l : ys) {
            auto m = transition_measure(l);
            auto e = profile_extrema(l);
            bool ok = m.atoms.size() == e.minima.size();
            Rational total = 0, first = 0;
            for (size_t i = 0; ok && i < m.atoms.size(); ++i) {
                ok = m.atoms[i].mass > 0 && m.atoms[i].position == Rational(e.minima[i]);
                total += m.atoms[i].mass;
                first += m.atoms[i].mass * m.atoms[i].position;
            }
            r.expect(ok && total == 1 && first == 0 && moment_htilde(2, l) == Rational(l.size()), [&] { return at(l); });
        }
    }
    {
        Recorder r(out, "transition", "moments and p~ satisfy the exp/log relations, k <= 6, and f~_2 = |lambda|");
        for (const auto& l : ys) {
            auto h = moments_from_ptilde(ptilde_values(l, 6), 6, Rational(0));
            auto m = transition_measure(l);
            bool ok = free_cumulants(l, 2)[2] == Rational(l.size());
            for (int k = 2; k <= 6; ++k) ok = ok && h[k] == m.moment(k);
            r.expect(ok, [&] { return at(l); });
        }
    }
    {
        Recorder r(out, "transition", "measure of the shrunk profile is the pushforward, s in {2, 3}");
        for (const auto& l : ys)
            for (int s : {2, 3}) {
                auto e = profile_extrema(l);
                std::vector<Rational> pt(7);
                for (int k = 1; k <= 6; ++k) pt[k] = eval_ptilde_scaled(k, e, Rational(s));
                auto h = moments_from_ptilde(pt, 6, Rational(0));
                auto m = transition_measure(l).scaled(Rational(s));
                bool ok = true;
                for (int k = 2; k <= 6; ++k) ok = ok && h[k] == m.moment(k);
                r.expect(ok, [&] { return at(l) + " s=" + std::to_string(s); });
            }
    }
}

void scaling_group(Checks& out, const IdentityCaps& caps) {
    const auto ys = diagrams_up_to(caps.diagram_boxes);
    Recorder r(out, "scaling", "p~_k of the profile shrunk by s equals s^{-k} p~_k, s in {2, 3, 1/2}");
    for (const auto& l : ys) {
        auto e = profile_extrema(l);
        for (const Rational& s : {Rational(2), Rational(3), Rational(1, 2)})
            for (int k = 1; k <= caps.index; ++k)
                r.expect(eval_ptilde_scaled(k, e, s) == pow_q(s, -k) * eval_ptilde(k, l), [&] { return at(l, k); });
    }
}

void evaluation_group(Checks& out, const IdentityCaps& caps) {
    const auto ys = diagrams_up_to(caps.diagram_boxes);
    const Basis bases[] = {Basis::p, Basis::ptilde, Basis::htilde, Basis::psharp, Basis::ftilde};
    std::vector<Observable> elems;
    for (Basis b : bases) {
        int lo = (b == Basis::p || b == Basis::psharp) ? 1 : 2;
        for (int k = lo; k <= 6; ++k) elems.push_back(Observable::generator(b, k));
        for (int i = lo; i <= 3; ++i)
            for (int j = i; i + j <= 6; ++j) elems.push_back(Observable::generator(b, i) * Observable::generator(b, j));
        Observable mixed = Observable::generator(b, 3) * Rational(2, 3) + Observable::generator(b, 2);
        mixed += Rational(5);
        elems.push_back(mixed);
    }
    Recorder r(out, "evaluation", "values are unchanged by every change of basis");
    for (const auto& e : elems)
        for (Basis b : bases) {
            Observable c = to_basis(e, b);
            for (const auto& l : ys)
                r.expect(eval(c, l) == eval(e, l), [&] { return e.to_text() + " via " + basis_tag(b) + " at " + at(l); });
        }
}

void structure_group(Checks& out) {
    const int cap = algebra_caps().structure_boxes;
    const auto parts = nonempty_partitions_up_to(cap - 1);
    const std::vector<std::pair<std::string, IndexSet>> filtrations = {
        {"{}", IndexSet::none()}, {"{1}", IndexSet::of({1})}, {"{2}", IndexSet::of({2})}, {"N", IndexSet::natural()}};
    Recorder routes(out, "structure", "quadruple counting equals expansion multiplication");
    Recorder unit(out, "structure", "coefficient of p#_{sigma u tau} is 1");
    Recorder sym(out, "structure", "f^rho_{sigma tau} = f^rho_{tau sigma}");
    Recorder sub(out, "structure", "|rho|_J <= |sigma|_J + |tau|_J for J in {}, {1}, {2}, N");
    Recorder strict(out, "structure", "other terms have |rho|_N < |sigma|_N + |tau|_N");
    Recorder mk(out, "structure", "coefficient of p#_{(sigma minus k) u 1^k} in p#_sigma p#_k is k m_k(sigma), k >= 2");
    for (const auto& s : parts)
        for (const auto& t : parts) {
            if (size(s) + size(t) > cap) continue;
            auto what = [&] { return "sigma=" + to_string(s) + " tau=" + to_string(t); };
            Expansion f = structure_constants(s, t);
            if (MonomialOrder{}(t, s) || s == t) routes.expect(f == structure_constants_by_expansion(s, t), what);
            const Partition top = canonical(join(s, t));
            unit.expect(f.count(top) && f.at(top) == 1, what);
            sym.expect(f == structure_constants(t, s), what);
            bool ok_sub = true, ok_strict = true;
            for (const auto& [rho, c] : f) {
                for (const auto& [name, J] : filtrations)
                    ok_sub = ok_sub && filtration_weight(rho, J) <= filtration_weight(s, J) + filtration_weight(t, J);
                if (rho != top)
                    ok_strict = ok_strict && filtration_weight(rho, IndexSet::natural()) <
                                                 filtration_weight(s, IndexSet::natural()) + filtration_weight(t, IndexSet::natural());
            }
            sub.expect(ok_sub, what);
            strict.expect(ok_strict, what);
            if (t.size() == 1 && t[0] >= 2 && multiplicity(s, t[0]) >= 1) {
                const int k = t[0];
                Partition rest = s;
                rest.erase(std::find(rest.begin(), rest.end(), k));
                Partition target = canonical(join(rest, ones(k)));
                mk.expect(f.count(target) && f.at(target) == Rational(k * multiplicity(s, k)), what);
            }
        }
}

void filtration_group(Checks& out) {
    Recorder r(out, "filtration", "deg_N agrees with the weight filtration, indices <= 6");
    std::vector<Observable> elems;
    for (int k = 1; k <= 6; ++k) elems.push_back(Observable::generator(Basis::psharp, k));
    for (int k = 2; k <= 6; ++k) elems.push_back(Observable::generator(Basis::ptilde, k));
    for (int i = 1; i <= 3; ++i)
        for (int j = i; i + j <= 6; ++j) {
            elems.push_back(Observable::generator(Basis::psharp, i) * Observable::generator(Basis::psharp, j));
            if (i >= 2) elems.push_back(Observable::generator(Basis::ptilde, i) * Observable::generator(Basis::ptilde, j));
        }
    for (const auto& e : elems)
        r.expect(filtration_degree(e, IndexSet::natural()) == weight_degree(e), [&] { return e.to_text(); });
}

void lagrange_group(Checks& out) {
    Rng rng(0x5eed);
    auto small = [&] {
        Rational q(static_cast<long>(rng.next() % 11) - 5, static_cast<long>(rng.next() % 4) + 1);
        q.canonicalize();
        return q;
    };
    {
        Recorder r(out, "lagrange", "the four forms of the inversion agree to order 10 on random series");
        for (int trial = 0; trial < 20; ++trial) {
            auto b = RationalSeries::one(10, Rational(0));
            for (int k = 2; k <= 10; ++k) b[k] = small();
            auto inv = lagrange_invert(b);
            auto la = inv.a.log();
            bool ok = lagrange_compose_identity(inv.a, b) && lagrange_b_from_a(inv.a) == b;
            for (int k = 2; k <= 10; ++k) ok = ok && la[k] * Rational(k) == inv.a_tilde[k];
            r.expect(ok, [&] { return "trial " + std::to_string(trial); });
        }
    }
    {
        Recorder r(out, "lagrange", "combinatorial inversion round trip and its coefficient pattern, k <= 8");
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> a(10);
            for (int k = 2; k < 10; ++k) a[k] = small();
            r.expect(combinatorial_forward(combinatorial_invert(a)) == a && combinatorial_invert(combinatorial_forward(a)) == a,
                     [&] { return "trial " + std::to_string(trial); });
        }
        for (int i = 2; i <= 8; ++i) {
            std::vector<Rational> e(9);
            e[i] = 1;
            auto b = combinatorial_invert(e);
            bool ok = true;
            for (int k = 0; k <= 8; ++k) {
                Rational want = 0;
                if (k >= i && (k - i) % 2 == 0) {
                    int j = (k - i) / 2;
                    want = Rational(binomial(k - j, j) * k, k - j);
                    want.canonicalize();
                    if (j % 2) want = -want;
                }
                ok = ok && b[k] == want;
            }
            r.expect(ok, [&] { return "unit vector at " + std::to_string(i); });
        }
    }
}

void theorems_group(Checks& out) {
    auto rep = leading_term_checks(algebra_caps().theorem_index);
    for (const auto& c : rep.checks) {
        Recorder r(out, "theorems", c.statement + (c.exact ? " [exact]" : " [" + c.filtration + " < " + std::to_string(c.bound) + "]"));
        r.expect(c.pass, [&] {
            return "remainder degree " + (c.remainder_degree ? std::to_string(*c.remainder_degree) : std::string("none"));
        });
    }
}

void expectations_group(Checks& out, const IdentityCaps& caps, int threads) {
    {
        Recorder r(out, "expectations", "Plancherel weights sum to 1, n <= 14");
        for (int n = 1; n <= kDefaultEnumerationCap; ++n) {
            Rational s = 0;
            for (const auto& [l, w] : plancherel_distribution(n)) s += w;
            r.expect(s == 1, [&] { return "n=" + std::to_string(n); });
        }
    }
    {
        Recorder r(out, "expectations", "<p#_rho>_n is n^{falling r} for rho = (1^r) and 0 otherwise");
        for (const auto& rho : nonempty_partitions_up_to(caps.expectation_rho)) {
            Observable f = Observable::term(Basis::psharp, rho);
            const bool all_ones = multiplicity(rho, 1) == static_cast<int>(rho.size());
            for (int n = 1; n <= caps.expectation_n; ++n) {
                Rational want = all_ones ? Rational(falling_factorial(n, rho.size())) : Rational(0);
                r.expect(exact_expectation(f, n, kDefaultEnumerationCap, threads) == want,
                         [&] { return "rho=" + to_string(rho) + " n=" + std::to_string(n); });
            }
        }
    }
}

void polynomiality_group(Checks& out, const IdentityCaps& caps) {
    std::vector<Observable> fs;
    for (int k = 2; k <= caps.lln_index; ++k) fs.push_back(Observable::generator(Basis::ptilde, k));
    fs.push_back(Observable::generator(Basis::ptilde, 2) * Observable::generator(Basis::ptilde, 3));
    fs.push_back(power(Observable::generator(Basis::ptilde, 3), 2));
    fs.push_back(Observable::generator(Basis::htilde, 4));
    fs.push_back(Observable::term(Basis::psharp, {2, 2}) + Observable::term(Basis::psharp, {1, 1, 1}));
    {
        Recorder r(out, "polynomiality", "<f>_n is a polynomial of degree <= deg_1(f)/2, fitted and reproduced up to n = 12");
        for (const auto& f : fs) {
            auto fit = fit_expectation_polynomial(f, caps.expectation_n);
            r.expect(fit.degree_ok && fit.reproduces && fit.fitted == expectation_polynomial(f).monomial(),
                     [&] { return f.to_text(); });
        }
    }
    {
        Recorder r(out, "polynomiality", "leading coefficient of <p~_{2m}>_n is (2m)!/(m!m!)");
        for (int k = 2; k <= caps.lln_index; k += 2) {
            auto fit = fit_expectation_polynomial(Observable::generator(Basis::ptilde, k), caps.expectation_n);
            r.expect(fit.fitted.degree() == k / 2 && fit.fitted.leading() == omega_moment(k),
                     [&] { return "k=" + std::to_string(k) + " fitted " + fit.fitted.to_string("n"); });
        }
    }
}

void sampler_group(Checks& out, const IdentityCaps& caps) {
    Recorder r(out, "sampler", "growth-process marginal equals M_n by exact path sums");
    for (int n = 0; n <= caps.sampler_n; ++n)
        r.expect(exact_growth_marginal(n) == plancherel_distribution(n), [&] { return "n=" + std::to_string(n); });
}

}  // namespace

const std::vector<std::string>& identity_groups() {
    static const std::vector<std::string> g = {"partitions", "characters", "ptilde-in-p", "phi",        "residue",
                                               "exact-relation", "conjugation", "transition", "scaling", "evaluation",
                                               "structure",  "filtration", "lagrange",    "theorems",   "expectations",
                                               "polynomiality", "sampler"};
    return g;
}

IdentityReport run_identities(const IdentityCaps& caps, const std::vector<std::string>& groups, int threads) {
    for (const auto& g : groups)
        if (std::find(identity_groups().begin(), identity_groups().end(), g) == identity_groups().end())
            throw std::invalid_argument("unknown identity group: " + g);
    auto wanted = [&](const std::string& g) { return groups.empty() || std::find(groups.begin(), groups.end(), g) != groups.end(); };
    IdentityReport rep;
    auto& out = rep.checks;
    if (wanted("partitions")) partitions_group(out);
    if (wanted("characters")) characters_group(out);
    if (wanted("ptilde-in-p")) ptilde_group(out, caps);
    if (wanted("phi")) phi_group(out, caps);
    if (wanted("residue")) residue_group(out, caps);
    if (wanted("exact-relation")) exact_relation_group(out, caps);
    if (wanted("conjugation")) conjugation_group(out, caps);
    if (wanted("transition")) transition_group(out, caps);
    if (wanted("scaling")) scaling_group(out, caps);
    if (wanted("evaluation")) evaluation_group(out, caps);
    if (wanted("structure")) structure_group(out);
    if (wanted("filtration")) filtration_group(out);
    if (wanted("lagrange")) lagrange_group(out);
    if (wanted("theorems")) theorems_group(out);
    if (wanted("expectations")) expectations_group(out, caps, threads);
    if (wanted("polynomiality")) polynomiality_group(out, caps);
    if (wanted("sampler")) sampler_group(out, caps);
    return rep;
}

}  // namespace kerov
