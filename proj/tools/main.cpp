#include "commands.hpp"
#include "run_config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace kerov::cli;

namespace {

struct Bound {
    CLI::Option* opt;
    std::function<void(RunConfig&)> apply;
};

// flags land in `f`; only options actually given override the lower layers
std::vector<Bound> add_common(CLI::App* app, RunConfig& f) {
    std::vector<Bound> b;
    auto add = [&](CLI::Option* o, auto member) {
        b.push_back({o, [&f, member](RunConfig& c) { c.*member = f.*member; }});
    };
    add(app->add_option("--n", f.n, "diagram size (expect: largest n)"), &RunConfig::n);
    add(app->add_option("--samples", f.samples, "number of samples N"), &RunConfig::samples);
    add(app->add_option("--kmax", f.kmax, "largest index"), &RunConfig::kmax);
    add(app->add_option("--seed", f.seed, "master seed"), &RunConfig::seed);
    add(app->add_option("--threads", f.threads, "worker cap (default: KEROV_THREADS, then hardware)"), &RunConfig::threads);
    add(app->add_option("--cap-boxes", f.cap_boxes, "identities: largest |lambda|; expect: enumeration cap"), &RunConfig::cap_boxes);
    add(app->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"})), &RunConfig::format);
    add(app->add_option("--out", f.out, "output file (default stdout)"), &RunConfig::out);
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kerov observables and Plancherel measure laboratory"};
    app.require_subcommand(1);
    std::string config_file;
    app.add_option("--config", config_file, "JSON file with run settings; flags take precedence")->check(CLI::ExistingFile);

    RunConfig f;
    std::vector<std::pair<CLI::App*, std::vector<Bound>>> subs;
    auto sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        subs.emplace_back(s, add_common(s, f));
        return s;
    };

    auto* ids = sub("identities", "run the exact identity suite");
    std::string dump, basis = "p";
    std::vector<std::string> structure;
    ids->add_option("--dump", dump, "print an observable in canonical text form, e.g. pt4");
    ids->add_option("--basis", basis, "target basis for --dump: p, pt, ht, p#, ft");
    ids->add_option("--structure", structure, "print the structure constants of two partitions")->expected(2);
    auto* groups = ids->add_option("groups", f.args, "groups to run (default all)");
    subs.back().second.push_back({groups, [&f](RunConfig& c) { c.args = f.args; }});

    sub("sample", "draw Plancherel diagrams as JSON lines");

    auto* ex = sub("expect", "exact Plancherel expectations for n = 1..--n");
    auto* obs = ex->add_option("observable", f.args, "observable, e.g. p#2,1 or pt4")->required();
    subs.back().second.push_back({obs, [&f](RunConfig& c) { c.args = f.args; }});

    auto* clt = sub("clt", "Monte Carlo central limit checks");
    auto* var = clt->add_option("variant", f.variant, "characters, shape or transition")
                    ->check(CLI::IsMember({"characters", "shape", "transition"}));
    subs.back().second.push_back({var, [&f](RunConfig& c) { c.variant = f.variant; }});

    sub("lln", "Monte Carlo law of large numbers");

    auto* bi = sub("biane", "character asymptotics on a diagram family");
    {
        auto& b = subs.back().second;
        b.push_back({bi->add_option("--family", f.family, "blowup or plancherel"), [&f](RunConfig& c) { c.family = f.family; }});
        b.push_back({bi->add_option("--base", f.base, "base diagram of the blow-up family"), [&f](RunConfig& c) { c.base = f.base; }});
        b.push_back({bi->add_option("--rho", f.rho, "cycle type, e.g. 2 or 3,2"), [&f](RunConfig& c) { c.rho = f.rho; }});
        b.push_back({bi->add_option("--ns", f.ns, "diagram sizes")->delimiter(','), [&f](RunConfig& c) { c.ns = f.ns; }});
        b.push_back({bi->add_option("-A,--A", f.A, "Y(A) bound"), [&f](RunConfig& c) { c.A = f.A; }});
    }

    auto* sh = sub("shape", "rescaled profile against the limit shape, as plot data");
    subs.back().second.push_back({sh->add_option("--grid", f.grid, "grid points on [-2.5, 2.5]"), [&f](RunConfig& c) { c.grid = f.grid; }});

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* chosen = app.get_subcommands().front();
        if (chosen == ids && !dump.empty()) {
            std::cout << dump_observable(dump, basis) << "\n";
            return 0;
        }
        if (chosen == ids && !structure.empty()) {
            std::cout << structure_text(structure[0], structure[1]) << "\n";
            return 0;
        }

        RunConfig c = defaults_for(chosen->get_name());
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            auto j = nlohmann::json::parse(in);
            j.erase("subcommand");
            c = merge_json(c, j);
        }
        for (const auto& [s, bound] : subs)
            if (s == chosen)
                for (const auto& b : bound)
                    if (b.opt->count() > 0) b.apply(c);

        if (c.out.empty()) return run(c, std::cout, std::cerr);
        std::ofstream out(c.out);
        if (!out) throw std::runtime_error("cannot open " + c.out);
        int status = run(c, out, std::cerr);
        out.close();
        if (!out) throw std::runtime_error("write failed: " + c.out);
        return status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
