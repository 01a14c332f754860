#pragma once

#include "kerov/extended.hpp"
#include "kerov/observable.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kerov {

struct TheoremCheck {
    std::string statement;   // e.g. "q_k expansion, k=4"
    std::string filtration;  // "weight" or "deg1"
    int bound = 0;           // remainder must have degree < bound
    std::optional<int> remainder_degree;  // empty when the remainder vanishes
    bool exact = false;      // an exact equality rather than a degree bound
    bool pass = false;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool all_pass() const;
};

// symbolic leading-term statements for indices up to kmax
TheoremReport leading_term_checks(int kmax);
// same, but throws std::runtime_error naming the first failing statement
TheoremReport verify_leading_term_theorems(int kmax);

// k^{m/2} H_m(x / sqrt(k)) with x = p#_k / (p#_1)^{k/2}; rational coefficients
ExtendedElement scaled_hermite(int k, int m);

}  // namespace kerov
