#include "kerov/plancherel.hpp"

#include "kerov/algebra.hpp"
#include "kerov/characters.hpp"
#include "kerov/observables.hpp"
#include "kerov/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace kerov {

Rational exact_expectation(const Observable& f, int n, int cap, int threads) {
    if (n < 0) throw std::invalid_argument("exact_expectation: n >= 0");
    if (n > cap) throw CapExceeded("exact_expectation: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    auto ys = enumerate_partitions(n, std::max(cap, n));
    std::vector<Rational> terms(ys.size());
    parallel_for(ys.size(), threads, [&](std::size_t i) {
        BigInt d = dimension(ys[i]);
        terms[i] = eval(f, ys[i]) * Rational(d * d);
    });
    Rational acc = 0;
    for (const auto& t : terms) acc += t;
    return acc / Rational(factorial(n));
}

int ExpectationPolynomial::degree() const { return monomial().degree(); }

Rational ExpectationPolynomial::operator()(long n) const {
    Rational acc = 0;
    for (size_t r = 0; r < falling.size(); ++r)
        if (falling[r] != 0) acc += falling[r] * Rational(falling_factorial(n, r));
    return acc;
}

Polynomial ExpectationPolynomial::monomial() const {
    Polynomial out, basis = Polynomial::constant(1);
    for (size_t r = 0; r < falling.size(); ++r) {
        out += basis * falling[r];
        basis = basis * Polynomial::linear_root(Rational(static_cast<long>(r)));
    }
    return out;
}

ExpectationPolynomial expectation_polynomial(const Observable& f) {
    Observable s = to_basis(f, Basis::psharp);
    ExpectationPolynomial out;
    for (const auto& [rho, c] : s.terms()) {
        if (multiplicity(rho, 1) != static_cast<int>(rho.size())) continue;  // only rho = (1^r) survives
        size_t r = rho.size();
        if (out.falling.size() <= r) out.falling.resize(r + 1);
        out.falling[r] += c;
    }
    return out;
}

PolynomialFit fit_expectation_polynomial(const Observable& f, int check_up_to, int cap) {
    PolynomialFit fit;
    auto d = filtration_degree(f, IndexSet::of({1}));
    fit.deg1 = d.value_or(0);
    fit.bound = fit.deg1 / 2;
    std::vector<Rational> xs, ys;
    for (int n = 1; n <= fit.bound + 2; ++n) {
        xs.emplace_back(n);
        ys.push_back(exact_expectation(f, n, cap));
    }
    fit.fitted = interpolate(xs, ys);
    fit.degree_ok = fit.fitted.degree() <= fit.bound;
    fit.reproduces = true;
    for (int n = fit.bound + 3; n <= check_up_to; ++n)
        if (fit.fitted(Rational(n)) != exact_expectation(f, n, cap)) fit.reproduces = false;
    fit.checked_up_to = check_up_to;
    return fit;
}

// -- growth process

namespace {

struct ExactStep {
    std::vector<int> contents;
    std::vector<double> thresholds;  // cumulative, last is exactly 1
};

const std::map<std::vector<int>, ExactStep>& exact_step_table() {
    static const auto table = [] {
        std::map<std::vector<int>, ExactStep> t;
        for (const auto& lambda : diagrams_up_to(kExactGrowthSize - 1)) {
            auto mu = transition_measure(lambda);
            ExactStep step;
            Rational cum = 0;
            for (const auto& a : mu.atoms) {
                cum += a.mass;
                step.contents.push_back(static_cast<int>(a.position.get_num().get_si()));
                step.thresholds.push_back(cum.get_d());
            }
            if (cum != 1) throw std::logic_error("transition measure does not sum to 1");
            step.thresholds.back() = 1.0;
            t.emplace(lambda.rows(), std::move(step));
        }
        return t;
    }();
    return table;
}

// mass of minimum i, as a product of ratios each in (0,1)
double fresh_mass(const InterlacingExtrema& e, size_t i) {
    const double x = e.minima[i];
    double m = 1;
    for (size_t j = 0; j < e.maxima.size(); ++j) {
        size_t partner = j < i ? j : j + 1;
        m *= (x - e.maxima[j]) / (x - e.minima[partner]);
    }
    return m;
}

}  // namespace

SamplerState::SamplerState(std::uint64_t seed) : rng_(seed) {}

void SamplerState::init_masses() {
    mu_.resize(ext_.minima.size());
    auto tm = transition_measure(YoungDiagram(rows_));
    for (size_t i = 0; i < mu_.size(); ++i) mu_[i] = tm.atoms[i].mass.get_d();
}

void SamplerState::add_box(int c) {
    auto& xs = ext_.minima;
    auto& ys = ext_.maxima;
    auto it = std::lower_bound(xs.begin(), xs.end(), c);
    if (it == xs.end() || *it != c) throw std::invalid_argument("add_box: no addable corner at content " + std::to_string(c));
    const size_t i = it - xs.begin();

    // row r with rows[r] - r == c; the sequence rows[r] - r is strictly decreasing
    int lo = 0, hi = static_cast<int>(rows_.size());
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (rows_[mid] - mid > c) lo = mid + 1;
        else hi = mid;
    }
    if (lo == static_cast<int>(rows_.size())) rows_.push_back(1);
    else ++rows_[lo];

    const bool left_max = i > 0 && ys[i - 1] == c - 1;
    const bool right_max = i < ys.size() && ys[i] == c + 1;

    if (!mu_.empty())
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            double d = xs[j] - c;
            mu_[j] *= d * d / (d * d - 1);
        }

    // maxima: drop c+1, c-1 when they were maxima, insert c
    if (right_max) ys.erase(ys.begin() + i);
    ys.insert(ys.begin() + i, c);
    if (left_max) ys.erase(ys.begin() + (i - 1));

    // minima: c is replaced by whichever of c-1, c+1 are new minima
    std::vector<int> fresh;
    if (!left_max) fresh.push_back(c - 1);
    if (!right_max) fresh.push_back(c + 1);
    xs.erase(xs.begin() + i);
    xs.insert(xs.begin() + i, fresh.begin(), fresh.end());
    if (!mu_.empty()) {
        mu_.erase(mu_.begin() + i);
        mu_.insert(mu_.begin() + i, fresh.size(), 0.0);
        for (size_t j = 0; j < fresh.size(); ++j) mu_[i + j] = fresh_mass(ext_, i + j);
    }
    ++steps_;
}

void growth_step(SamplerState& s) {
    const int n = static_cast<int>(s.steps());
    int content;
    if (n < kExactGrowthSize && s.masses().empty()) {
        const auto& step = exact_step_table().at(s.rows());
        double u = s.rng().uniform();
        size_t k = std::upper_bound(step.thresholds.begin(), step.thresholds.end(), u) - step.thresholds.begin();
        content = step.contents[std::min(k, step.contents.size() - 1)];
    } else {
        // past the exact table: floating masses, seeded once from the exact ones
        if (s.masses().empty()) s.init_masses();
        const auto& mu = s.masses();
        double total = 0;
        for (double m : mu) total += m;
        double u = s.rng().uniform() * total, cum = 0;
        size_t k = 0;
        for (; k + 1 < mu.size(); ++k) {
            cum += mu[k];
            if (u < cum) break;
        }
        content = s.extrema().minima[k];
    }
    s.add_box(content);
}

YoungDiagram sample(long n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("sample: n >= 0");
    SamplerState s(seed);
    for (long i = 0; i < n; ++i) growth_step(s);
    return s.diagram();
}

std::vector<std::pair<YoungDiagram, Rational>> growth_transitions(const YoungDiagram& lambda) {
    std::vector<std::pair<YoungDiagram, Rational>> out;
    auto mu = transition_measure(lambda);
    for (const auto& a : mu.atoms) {
        std::vector<int> rows = lambda.rows();
        const int c = static_cast<int>(a.position.get_num().get_si());
        int r = 0;
        while (r < static_cast<int>(rows.size()) && rows[r] - r != c) ++r;
        if (r == static_cast<int>(rows.size())) rows.push_back(1);
        else ++rows[r];
        out.emplace_back(YoungDiagram(rows), a.mass);
    }
    return out;
}

std::map<YoungDiagram, Rational> exact_growth_marginal(int n) {
    std::map<YoungDiagram, Rational> cur{{YoungDiagram(), Rational(1)}};
    for (int step = 0; step < n; ++step) {
        std::map<YoungDiagram, Rational> next;
        for (const auto& [lambda, p] : cur)
            for (const auto& [child, q] : growth_transitions(lambda)) next[child] += p * q;
        cur = std::move(next);
    }
    return cur;
}

std::map<YoungDiagram, Rational> plancherel_distribution(int n, int cap) {
    std::map<YoungDiagram, Rational> out;
    if (n == 0) {
        out[YoungDiagram()] = 1;
        return out;
    }
    for (const auto& lambda : enumerate_partitions(n, cap)) out[lambda] = plancherel_weight(lambda);
    return out;
}

}  // namespace kerov
