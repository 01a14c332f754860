#pragma once

#include "kerov/observable.hpp"
#include "kerov/partitions.hpp"
#include "kerov/series.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace kerov {

struct AlgebraCaps {
    int structure_boxes = 8;  // |sigma| + |tau| for structure constants, |rho| for fitted expansions
    int theorem_index = 6;    // largest index in the leading-term checks
};
AlgebraCaps& algebra_caps();

// -- expansions in the p basis

Observable ptilde_in_p(int k);           // p~_k = sum_j C(k,2j+1) 2^{-2j} p_{k-1-2j}, p_0 = 0
Observable p_in_ptilde(int k);           // triangular inverse of the above
Observable psharp_in_p(int k);           // generating-series route
Observable psharp_rho_in_p(const Partition& rho);  // evaluation fitting
Observable htilde_in_ptilde(int k);
Observable ptilde_in_htilde(int k);
std::vector<Observable> free_cumulant_series(int kmax);  // f~_k in the h~ basis at index k
Observable htilde_in_ftilde(int k);

Observable to_basis(const Observable& e, Basis target);
Rational eval(const Observable& e, const YoungDiagram& lambda);

// -- structure constants of the psharp basis

using Expansion = std::map<Partition, Rational, MonomialOrder>;

// Fix s of cycle type rho on X = {0..r-1}; count quadruples (X1,s1,X2,s2) with
// X1 u X2 = X, types sigma and tau, and s1 s2 = s where s2 acts first.
BigInt count_quadruples(const Partition& rho, const Partition& sigma, const Partition& tau);
Expansion structure_constants(const Partition& sigma, const Partition& tau);
// same coefficients obtained by multiplying the fitted p expansions
Expansion structure_constants_by_expansion(const Partition& sigma, const Partition& tau);
Observable psharp_product(const Observable& a, const Observable& b);
std::string format_expansion(const Expansion& e);  // "(2,2):1 (3):4 (1,1):2"

// J given as an explicit set of part sizes; all_parts means J = N
struct IndexSet {
    bool all_parts = false;
    std::set<int> parts;

    static IndexSet none() { return {}; }
    static IndexSet natural() { return {true, {}}; }
    static IndexSet of(std::initializer_list<int> p) { return {false, p}; }
    bool contains(int j) const { return all_parts || parts.count(j); }
};

int filtration_weight(const Partition& rho, const IndexSet& J);  // |rho| + sum_{j in J} m_j(rho)
std::optional<int> filtration_degree(const Observable& e, const IndexSet& J);  // e in psharp basis

// -- weight grading (via the p~ basis)

std::optional<int> weight_degree(const Observable& e);
Observable top_weight_component(const Observable& e);

// -- Lagrange inversion

struct LagrangeInversion {
    RationalSeries a;        // A(t) = 1 + sum a_k t^k, a_k = 1/(k+1) [u^k] B^{k+1}
    RationalSeries a_tilde;  // a~_k = [u^k] B^k at index k, with ln A = sum a~_k t^k / k
};

LagrangeInversion lagrange_invert(const RationalSeries& b);
// the other two forms, for cross-checks
RationalSeries lagrange_b_from_a(const RationalSeries& a);  // b_k = -1/(k-1) [t^k] A^{-(k-1)}
bool lagrange_compose_identity(const RationalSeries& a, const RationalSeries& b);  // x -> xA(x) inverts x -> x/B(x)

// b_k = sum_j (-1)^j k/(k-j) C(k-j,j) a_{k-2j}
std::vector<Rational> combinatorial_invert(const std::vector<Rational>& a);
// a_k = sum_j C(k,j) b_{k-2j}
std::vector<Rational> combinatorial_forward(const std::vector<Rational>& b);

}  // namespace kerov
