#pragma once

#include <json.hpp>

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace kerov::cli {

// everything a run depends on; embedded in the header of every output
struct RunConfig {
    std::string subcommand;
    std::string variant;  // clt: characters | shape | transition
    long n = 4000;
    long samples = 4000;
    int kmax = 5;
    std::uint64_t seed = 20010601;
    int threads = 0;     // 0: KEROV_THREADS, else the hardware count
    int cap_boxes = 10;  // identities: diagram sizes; expect: enumeration cap
    int grid = 401;
    std::string format = "json";
    std::string out;  // empty: stdout
    // biane
    std::string family = "blowup";
    std::string base = "7,6,5,4,2,1";
    std::string rho = "2";
    std::vector<long> ns = {100, 400, 1600};
    double A = 3;
    // free arguments (observable text for expect)
    std::vector<std::string> args;

    bool operator==(const RunConfig&) const = default;
};

RunConfig defaults_for(const std::string& subcommand);

nlohmann::json to_json(const RunConfig& c);
// fields missing from j keep their values in base
RunConfig merge_json(RunConfig base, const nlohmann::json& j);

// first line(s) of any output: "# config=<json>" for csv, {"config": ...} otherwise
std::string csv_header(const RunConfig& c);
RunConfig read_header(std::istream& in);

void validate(const RunConfig& c);  // throws std::invalid_argument

}  // namespace kerov::cli
