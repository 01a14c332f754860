#pragma once

#include "kerov/partitions.hpp"
#include "kerov/polynomial.hpp"
#include "kerov/rational.hpp"

#include <vector>

namespace kerov {

// -- exact evaluations on a diagram

Rational eval_p(int k, const YoungDiagram& lambda);       // sum a_i^k - (-b_i)^k
Rational eval_ptilde(int k, const YoungDiagram& lambda);  // sum x_i^k - sum y_j^k
// same, for extrema divided by s (the profile of the diagram shrunk by s)
Rational eval_ptilde_scaled(int k, const InterlacingExtrema& e, const Rational& s);
Rational eval_psharp(const Partition& rho, const YoungDiagram& lambda);  // character route
Rational eval_psharp_residue(int k, const YoungDiagram& lambda);        // z^{-1} coefficient route

// power sums p_1..p_kmax (index 0 unused) and p~_0..p~_kmax
std::vector<Rational> power_sums(const YoungDiagram& lambda, int kmax);
std::vector<Rational> ptilde_values(const YoungDiagram& lambda, int kmax);

struct Atom {
    Rational position;
    Rational mass;
};

struct TransitionMeasure {
    std::vector<Atom> atoms;

    Rational moment(int k) const;
    // pushforward under x -> x / s
    TransitionMeasure scaled(const Rational& s) const;
};

TransitionMeasure transition_measure(const YoungDiagram& lambda);
Rational moment_htilde(int k, const YoungDiagram& lambda);
// f~_k(lambda) at index k for k = 2..kmax; entries 0 and 1 are zero
std::vector<Rational> free_cumulants(const YoungDiagram& lambda, int kmax);

// -- reference curves

Rational omega_moment(int k);      // p~_k of the limit shape
Rational semicircle_moment(int k);  // Catalan numbers at even k
double omega(double x);
double semicircle_density(double x);

struct ReferenceCurve {
    enum class Kind { omega, semicircle } kind;

    double operator()(double x) const { return kind == Kind::omega ? omega(x) : semicircle_density(x); }
    Rational moment(int k) const { return kind == Kind::omega ? omega_moment(k) : semicircle_moment(k); }
};

// -- centred and scaled functionals, indexed by k (unused slots are 0)

struct FluctuationFunctionals {
    long n = 0;
    int kmax = 0;
    std::vector<double> q;    // q_1..q_{kmax+1}
    std::vector<double> g;    // g_0..g_kmax
    std::vector<double> eta;  // eta_2..eta_kmax
    std::vector<double> u;    // u_0..u_kmax
    std::vector<double> t;    // t_1..t_kmax
};

// exact rational numerators; the value is numerator * n^{half/2}
struct ScaledValue {
    Rational numerator;
    int half = 0;
};

struct ExactFluctuations {
    long n = 0;
    std::vector<ScaledValue> q, g, psharp;  // psharp[k] = p#_k(lambda) / n^{k/2}, before the 1/sqrt(k)
};

ExactFluctuations exact_fluctuations(const YoungDiagram& lambda, int kmax);
FluctuationFunctionals fluctuation_functionals(const YoungDiagram& lambda, int kmax);

}  // namespace kerov
