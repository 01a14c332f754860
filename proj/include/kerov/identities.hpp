#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace kerov {

// one named family of exact checks, each run over many cases
struct IdentityCheck {
    std::string group;
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    bool pass() const { return cases > 0 && failures == 0; }
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

struct IdentityCaps {
    int diagram_boxes = 10;   // diagrams used by pointwise identities
    int index = 8;            // largest k in pointwise identities
    int residue_index = 8;    // largest k for residue vs character route
    int expectation_rho = 6;  // |rho| in exact expectations
    int expectation_n = 12;
    int sampler_n = 6;        // exact path-sum marginals
    int lln_index = 8;        // leading coefficients of <p~_k>_n
};

// group names, in the order they run
const std::vector<std::string>& identity_groups();

// runs the listed groups (all when empty); algebra caps come from algebra_caps()
IdentityReport run_identities(const IdentityCaps& caps = {}, const std::vector<std::string>& groups = {}, int threads = 1);

}  // namespace kerov
