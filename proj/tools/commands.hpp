#pragma once

#include "run_config.hpp"

#include "kerov/observable.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace kerov::cli {

// "pt4", "p#2,1", "3/2*ht2*ht3 + p1", also "p̃₄", "p♯₂"
Observable parse_observable(const std::string& text);
Partition parse_partition(const std::string& text);  // "2,1", "(2,1)", "2 1"

std::string dump_observable(const std::string& text, const std::string& basis_tag);
std::string structure_text(const std::string& sigma, const std::string& tau);

// each returns the process exit status
int cmd_identities(const RunConfig& c, std::ostream& out, std::ostream& log);
int cmd_sample(const RunConfig& c, std::ostream& out);
int cmd_expect(const RunConfig& c, std::ostream& out);
int cmd_clt(const RunConfig& c, std::ostream& out);
int cmd_lln(const RunConfig& c, std::ostream& out);
int cmd_biane(const RunConfig& c, std::ostream& out);
int cmd_shape(const RunConfig& c, std::ostream& out);

int run(const RunConfig& c, std::ostream& out, std::ostream& log);

}  // namespace kerov::cli
