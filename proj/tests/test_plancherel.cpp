#include "kerov/algebra.hpp"
#include "kerov/identities.hpp"
#include "kerov/observables.hpp"
#include "kerov/plancherel.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace kerov;

namespace {

YoungDiagram Y(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }
Rational Q(long a, long b = 1) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

// number of standard tableaux by stripping corners
BigInt syt(std::vector<int> rows) {
    static std::map<std::vector<int>, BigInt> memo;
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    if (rows.empty()) return 1;
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    BigInt c = 0;
    for (size_t i = 0; i < rows.size(); ++i)
        if (i + 1 == rows.size() || rows[i + 1] < rows[i]) {
            auto r = rows;
            --r[i];
            c += syt(r);
        }
    return memo[rows] = c;
}

Rational plancherel_oracle(const YoungDiagram& l) {
    BigInt f = syt(l.rows()), fact = 1;
    for (int i = 2; i <= l.size(); ++i) fact *= i;
    return Rational(f * f) / Rational(fact);
}

}  // namespace

TEST_CASE("exact expectations") {
    auto p11 = Observable::term(Basis::psharp, {1, 1});
    auto p2 = Observable::term(Basis::psharp, {2});
    CHECK(exact_expectation(p11, 4) == 12);
    CHECK(exact_expectation(p2, 4) == 0);
    CHECK(exact_expectation(Observable::generator(Basis::ptilde, 4), 2) == 16);
    CHECK_THROWS_AS(exact_expectation(p2, 15), CapExceeded);
    CHECK(exact_expectation(p2, 15, 15) == 0);
    // by hand for small n
    for (int n = 1; n <= 7; ++n) {
        auto f = to_basis(Observable::generator(Basis::ptilde, 3), Basis::p) * Observable::generator(Basis::p, 2) +
                 to_basis(Observable::generator(Basis::htilde, 4), Basis::p);
        Rational s = 0;
        for (const auto& l : enumerate_partitions(n)) s += eval(f, l) * plancherel_oracle(l);
        CHECK(exact_expectation(f, n) == s);
        CHECK(exact_expectation(f, n, kDefaultEnumerationCap, 3) == s);
    }
}

TEST_CASE("expectation polynomials") {
    auto a = expectation_polynomial(Observable::term(Basis::psharp, {1, 1}));
    CHECK(a.monomial() == Polynomial({0, -1, 1}));
    CHECK(expectation_polynomial(Observable::term(Basis::psharp, {2})).monomial() == Polynomial{});
    CHECK(expectation_polynomial(Observable::generator(Basis::ptilde, 2)).monomial() == Polynomial({0, 2}));
    // every closed form matches enumeration
    const Observable fs[] = {Observable::generator(Basis::ptilde, 4), Observable::generator(Basis::htilde, 6),
                             power(Observable::generator(Basis::ftilde, 3), 2), Observable::generator(Basis::p, 5)};
    for (const auto& f : fs) {
        auto e = expectation_polynomial(f);
        for (int n = 0; n <= 9; ++n) CHECK(e(n) == exact_expectation(f, n));
    }
}

TEST_CASE("fitted polynomial respects the degree bound") {
    const Observable fs[] = {Observable::generator(Basis::ptilde, 4), Observable::generator(Basis::ptilde, 6),
                             Observable::term(Basis::psharp, {2, 2}), power(Observable::generator(Basis::htilde, 3), 2)};
    for (const auto& f : fs) {
        auto fit = fit_expectation_polynomial(f, 10);
        CHECK(fit.degree_ok);
        CHECK(fit.reproduces);
        CHECK(fit.fitted.degree() <= fit.bound);
        CHECK(fit.fitted == expectation_polynomial(f).monomial());
    }
}

TEST_CASE("growth transitions") {
    auto t = growth_transitions(Y({}));
    REQUIRE(t.size() == 1);
    CHECK((t[0].first == Y({1}) && t[0].second == 1));
    t = growth_transitions(Y({1}));
    REQUIRE(t.size() == 2);
    for (const auto& [child, p] : t) CHECK(p == Q(1, 2));
    // transition probability is dim(child) / ((n+1) dim(lambda))
    for (const auto& l : diagrams_up_to(8)) {
        Rational total = 0;
        for (const auto& [child, p] : growth_transitions(l)) {
            CHECK(p == Rational(syt(child.rows())) / Rational(syt(l.rows()) * (l.size() + 1)));
            total += p;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("marginals of the growth process are Plancherel") {
    auto m3 = exact_growth_marginal(3);
    CHECK(m3.at(Y({3})) == Q(1, 6));
    CHECK(m3.at(Y({2, 1})) == Q(2, 3));
    CHECK(m3.at(Y({1, 1, 1})) == Q(1, 6));
    for (int n = 0; n <= 7; ++n) {
        auto m = exact_growth_marginal(n);
        auto d = plancherel_distribution(n);
        CHECK(m == d);
        CHECK(m.size() == enumerate_partitions(n).size());
        for (const auto& [l, p] : m) CHECK(p == plancherel_oracle(l));
    }
}

TEST_CASE("sampler basics") {
    CHECK(sample(0, 1) == Y({}));
    CHECK(sample(1, 1) == Y({1}));
    CHECK_THROWS(sample(-1, 1));
    for (std::uint64_t s : {1ULL, 2ULL, 99ULL}) {
        CHECK(sample(200, s) == sample(200, s));
        CHECK(sample(200, s).size() == 200);
    }
    CHECK(!(sample(300, 1) == sample(300, 2)));
}

TEST_CASE("sampler frequencies at n = 6 within 4 standard errors") {
    const long N = 100000;
    std::map<YoungDiagram, long> hits;
    for (long i = 0; i < N; ++i) ++hits[sample(6, derive_seed(77, i))];
    for (const auto& l : enumerate_partitions(6)) {
        double p = plancherel_oracle(l).get_d();
        double se = std::sqrt(p * (1 - p) / N);
        INFO(l.to_string());
        CHECK(std::abs(hits[l] / double(N) - p) <= 4 * se);
    }
}

TEST_CASE("floating masses follow the exact transition measure") {
    SamplerState s(5);
    for (int i = 0; i < 25; ++i) growth_step(s);
    // the state switched to floating masses past the table
    REQUIRE(!s.masses().empty());
    Rng pick(9);
    for (int step = 0; step < 120; ++step) {
        auto tm = transition_measure(s.diagram());
        REQUIRE(tm.atoms.size() == s.masses().size());
        double total = 0;
        for (size_t i = 0; i < tm.atoms.size(); ++i) {
            CHECK(s.masses()[i] == doctest::Approx(tm.atoms[i].mass.get_d()).epsilon(1e-9));
            total += s.masses()[i];
        }
        CHECK(total == doctest::Approx(1).epsilon(1e-9));
        // move to an arbitrary addable corner, not one drawn from the masses
        const auto& xs = s.extrema().minima;
        s.add_box(xs[pick.next() % xs.size()]);
    }
    CHECK_THROWS(s.add_box(1000));
}

TEST_CASE("identity groups: plancherel") {
    auto r = run_identities({}, {"expectations", "polynomiality", "sampler"});
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.first_failure);
        CHECK(c.pass());
    }
}
