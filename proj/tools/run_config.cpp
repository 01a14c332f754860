#include "run_config.hpp"

#include <sstream>
#include <stdexcept>

namespace kerov::cli {

RunConfig defaults_for(const std::string& sub) {
    RunConfig c;
    c.subcommand = sub;
    if (sub == "identities") {
        c.kmax = 8;
    } else if (sub == "sample") {
        c.samples = 10;
    } else if (sub == "expect") {
        c.n = 12;
        c.cap_boxes = 14;
    } else if (sub == "clt") {
        c.variant = "characters";
    } else if (sub == "lln") {
        c.n = 10000;
        c.samples = 500;
        c.kmax = 8;
    } else if (sub == "shape") {
        c.kmax = 100;
    }
    return c;
}

nlohmann::json to_json(const RunConfig& c) {
    return {{"subcommand", c.subcommand}, {"variant", c.variant}, {"n", c.n},           {"samples", c.samples},
            {"kmax", c.kmax},             {"seed", c.seed},       {"threads", c.threads}, {"cap_boxes", c.cap_boxes},
            {"grid", c.grid},             {"format", c.format},   {"out", c.out},         {"family", c.family},
            {"base", c.base},             {"rho", c.rho},         {"ns", c.ns},           {"A", c.A},
            {"args", c.args}};
}

RunConfig merge_json(RunConfig c, const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [k, v] : j.items()) {
        if (k == "subcommand") v.get_to(c.subcommand);
        else if (k == "variant") v.get_to(c.variant);
        else if (k == "n") v.get_to(c.n);
        else if (k == "samples") v.get_to(c.samples);
        else if (k == "kmax") v.get_to(c.kmax);
        else if (k == "seed") v.get_to(c.seed);
        else if (k == "threads") v.get_to(c.threads);
        else if (k == "cap_boxes") v.get_to(c.cap_boxes);
        else if (k == "grid") v.get_to(c.grid);
        else if (k == "format") v.get_to(c.format);
        else if (k == "out") v.get_to(c.out);
        else if (k == "family") v.get_to(c.family);
        else if (k == "base") v.get_to(c.base);
        else if (k == "rho") v.get_to(c.rho);
        else if (k == "ns") v.get_to(c.ns);
        else if (k == "A") v.get_to(c.A);
        else if (k == "args") v.get_to(c.args);
        else throw std::invalid_argument("unknown config key: " + k);
    }
    return c;
}

std::string csv_header(const RunConfig& c) { return "# config=" + to_json(c).dump() + "\n"; }

RunConfig read_header(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty output");
    const std::string tag = "# config=";
    nlohmann::json j;
    if (line.rfind(tag, 0) == 0) {
        j = nlohmann::json::parse(line.substr(tag.size()));
    } else {
        j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {  // pretty-printed document
            std::ostringstream rest;
            rest << line << "\n" << in.rdbuf();
            j = nlohmann::json::parse(rest.str());
        }
        j = j.at("config");
    }
    return merge_json(RunConfig{}, j);
}

void validate(const RunConfig& c) {
    auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
    if (c.format != "json" && c.format != "csv") fail("--format must be json or csv");
    if (c.n < 0) fail("--n must be >= 0");
    if (c.samples < 1) fail("--samples must be >= 1");
    if (c.threads < 0) fail("--threads must be >= 0");
    if (c.grid < 1) fail("--grid must be >= 1");
    if (c.subcommand == "identities") {
        if (c.cap_boxes < 1 || c.cap_boxes > 14) fail("identities: --cap-boxes must be in 1..14");
        if (c.kmax < 2 || c.kmax > 10) fail("identities: --kmax must be in 2..10");
    }
    if (c.subcommand == "clt" && c.variant != "characters" && c.variant != "shape" && c.variant != "transition")
        fail("clt: variant must be characters, shape or transition");
    if ((c.subcommand == "clt" || c.subcommand == "lln") && c.kmax < 2) fail("--kmax must be >= 2");
    if (c.subcommand == "clt" && c.samples < 2) fail("clt: --samples must be >= 2");
    if (c.subcommand == "shape" && (c.kmax < 2 || c.kmax > 200)) fail("shape: --kmax must be in 2..200");
    if (c.subcommand == "biane" && c.family != "blowup" && c.family != "plancherel")
        fail("biane: --family must be blowup or plancherel");
}

}  // namespace kerov::cli
