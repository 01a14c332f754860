#pragma once

#include "kerov/observable.hpp"
#include "kerov/partitions.hpp"
#include "kerov/polynomial.hpp"
#include "kerov/rng.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace kerov {

inline constexpr int kDefaultEnumerationCap = 14;

// sum over Y_n of f(lambda) dim^2(lambda) / n!
Rational exact_expectation(const Observable& f, int n, int cap = kDefaultEnumerationCap, int threads = 1);

// <f>_n as a polynomial in n; stored in the falling-factorial basis
struct ExpectationPolynomial {
    std::vector<Rational> falling;  // coefficient of n^{falling r} at index r

    int degree() const;
    Rational operator()(long n) const;
    Polynomial monomial() const;  // same polynomial in powers of n
};

// closed form from the psharp expansion: sum_r f_{(1^r)} n^{falling r}
ExpectationPolynomial expectation_polynomial(const Observable& f);

struct PolynomialFit {
    int deg1 = 0;         // Kerov degree of f
    int bound = 0;        // deg1 / 2
    Polynomial fitted;    // interpolated through n = 1..bound+2
    int checked_up_to = 0;
    bool degree_ok = false;
    bool reproduces = false;  // matches every enumerated value up to checked_up_to
};

// interpolate <f>_n from enumeration and test it against further enumerated values
PolynomialFit fit_expectation_polynomial(const Observable& f, int check_up_to, int cap = kDefaultEnumerationCap);

// -- growth process

// diagrams below this size use a table of exact transition probabilities
inline constexpr int kExactGrowthSize = 20;

class SamplerState {
public:
    explicit SamplerState(std::uint64_t seed);

    const std::vector<int>& rows() const { return rows_; }
    YoungDiagram diagram() const { return YoungDiagram(rows_); }
    const InterlacingExtrema& extrema() const { return ext_; }
    long steps() const { return steps_; }
    Rng& rng() { return rng_; }

    // add the box sitting at the minimum with this content
    void add_box(int content);
    // current masses of the minima (float mode only; empty before)
    const std::vector<double>& masses() const { return mu_; }
    // start tracking floating masses, taken from the exact transition measure
    void init_masses();

private:
    std::vector<int> rows_;
    InterlacingExtrema ext_{{0}, {}};
    std::vector<double> mu_;
    Rng rng_;
    long steps_ = 0;
};

void growth_step(SamplerState& state);
YoungDiagram sample(long n, std::uint64_t seed);

// exact one-step transitions (child, probability) from the transition measure
std::vector<std::pair<YoungDiagram, Rational>> growth_transitions(const YoungDiagram& lambda);
// distribution after n steps from the empty diagram, by summing over all paths
std::map<YoungDiagram, Rational> exact_growth_marginal(int n);
// M_n as a table
std::map<YoungDiagram, Rational> plancherel_distribution(int n, int cap = kDefaultEnumerationCap);

}  // namespace kerov
