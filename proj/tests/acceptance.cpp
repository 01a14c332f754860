// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
//   acceptance [--only 1,7] [--threads T]

#include "kerov/identities.hpp"
#include "kerov/limit_theorems.hpp"
#include "kerov/parallel.hpp"
#include "kerov/plancherel.hpp"
#include "kerov/rng.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

using namespace kerov;

namespace {

// pinned tolerances
constexpr double kFrequencySigmas = 4.0;   // criterion 5
constexpr long kFrequencySamples = 1000000;
constexpr double kBianeGrowthBound = 1.5;  // criterion 9

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome from_groups(const std::vector<std::string>& groups, int threads) {
    auto r = run_identities({}, groups, threads);
    Outcome o{r.all_pass(), ""};
    long cases = 0;
    for (const auto& c : r.checks) {
        cases += c.cases;
        if (!c.pass()) o.detail += " FAILED[" + c.name + ": " + c.first_failure + "]";
    }
    o.detail = std::to_string(r.checks.size()) + " checks, " + std::to_string(cases) + " cases" + o.detail;
    return o;
}

Outcome from_report(const MomentReport& r) {
    Outcome o{r.all_pass(), ""};
    int failed = 0;
    for (const auto& c : r.criteria)
        if (!c.pass) {
            ++failed;
            std::ostringstream s;
            s << " FAILED[" << c.name << " = " << c.value << ", want " << c.relation << " " << c.threshold << "]";
            o.detail += s.str();
        }
    o.detail = r.kind + ": " + std::to_string(r.criteria.size() - failed) + "/" + std::to_string(r.criteria.size()) + " criteria" + o.detail;
    return o;
}

Outcome both(const Outcome& a, const Outcome& b) { return {a.pass && b.pass, a.detail + "; " + b.detail}; }

Outcome frequencies_at_6(int threads) {
    auto ys = draw_diagrams(6, kFrequencySamples, 20010601, threads);
    std::map<YoungDiagram, long> hits;
    for (const auto& y : ys) ++hits[y];
    double worst = 0;
    for (const auto& [l, p] : plancherel_distribution(6)) {
        double q = p.get_d(), se = std::sqrt(q * (1 - q) / kFrequencySamples);
        worst = std::max(worst, std::abs(hits[l] / double(kFrequencySamples) - q) / se);
    }
    std::ostringstream s;
    s << "n=6, " << kFrequencySamples << " samples, worst |z| = " << worst << " (bound " << kFrequencySigmas << ")";
    return {worst < kFrequencySigmas, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria 1-9"};
    std::vector<int> only;
    int threads = 0;
    app.add_option("--only", only, "criteria to run")->delimiter(',')->check(CLI::Range(1, 9));
    app.add_option("--threads", threads, "worker cap");
    CLI11_PARSE(app, argc, argv);
    const std::set<int> want(only.begin(), only.end());
    auto selected = [&](int i) { return want.empty() || want.count(i); };

    // criteria 7 and 8 share one sample set
    std::optional<SampleSet> clt_samples;
    auto clt_set = [&]() -> const SampleSet& {
        if (!clt_samples) {
            MonteCarloConfig c;
            c.n = 4000;
            c.samples = 4000;
            c.kmax = 5;
            c.threads = threads;
            clt_samples = draw_samples(c);
        }
        return *clt_samples;
    };

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"exact Plancherel expectations of p#_rho, |rho| <= 6, n <= 12", [&] { return from_groups({"expectations"}, threads); }},
        {"exact identity suite, |lambda| <= 10, indices <= 8",
         [&] { return from_groups({"ptilde-in-p", "phi", "residue", "exact-relation", "conjugation"}, threads); }},
        {"structure constants, |sigma| + |tau| <= 8", [&] { return from_groups({"structure"}, threads); }},
        {"leading-term theorems, indices <= 6", [&] { return from_groups({"theorems"}, threads); }},
        {"sampler: exact marginals n <= 6, frequencies at n = 6",
         [&] { return both(from_groups({"sampler"}, threads), frequencies_at_6(threads)); }},
        {"law of large numbers: leading coefficients and Monte Carlo at n = 10^4, N = 500",
         [&] {
             MonteCarloConfig c;
             c.n = 10000;
             c.samples = 500;
             c.kmax = 8;
             c.threads = threads;
             return both(from_groups({"polynomiality"}, threads), from_report(run_lln(c)));
         }},
        {"CLT for characters, n = 4000, N = 4000", [&] { return from_report(run_clt_characters(clt_set())); }},
        {"CLT for shapes and transition measures, n = 4000, N = 4000",
         [&] { return both(from_report(run_clt_shape(clt_set())), from_report(run_clt_transition(clt_set()))); }},
        {"character asymptotics on the blow-up family of 7,6,5,4,2,1, rho = (2)",
         [&] {
             auto r = biane_check(blowup_family(YoungDiagram::parse("7,6,5,4,2,1")), {2}, {100, 400, 1600}, 3);
             std::ostringstream s;
             s << "scaled residuals";
             for (const auto& e : r.entries) s << " " << e.scaled_residual;
             s << ", growth";
             bool ok = r.pass;
             for (double g : r.growth) {
                 s << " " << g;
                 ok = ok && g <= kBianeGrowthBound;
             }
             s << " (bound " << kBianeGrowthBound << ")";
             return Outcome{ok, s.str()};
         }},
    };

    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected(id)) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::printf("criterion %d: %s  %s  [%s] (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
