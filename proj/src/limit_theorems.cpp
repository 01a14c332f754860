#include "kerov/limit_theorems.hpp"

#include "kerov/characters.hpp"
#include "kerov/parallel.hpp"
#include "kerov/plancherel.hpp"
#include "kerov/polynomial.hpp"
#include "kerov/rng.hpp"
#include "kerov/stats.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace kerov {

namespace {

const char* kTolerances =
    "engineering tolerances, no convergence rates available: 15% relative on variances, "
    "4 Gaussian standard errors on means and covariances, KS at the 1% level";

Criterion at_most(std::string name, double value, double threshold) {
    return {std::move(name), value, threshold, "<=", value <= threshold};
}

Criterion above(std::string name, double value, double threshold) {
    return {std::move(name), value, threshold, ">", value > threshold};
}

FunctionalStat describe(const std::string& name, const std::vector<double>& x, double target_var, bool ks) {
    FunctionalStat s;
    s.name = name;
    const double N = static_cast<double>(x.size());
    s.mean = mean(x);
    s.variance = variance(x);
    s.stderr_mean = std::sqrt(s.variance / N);
    s.target_variance = target_var;
    if (target_var > 0) {
        s.z_mean = s.mean / std::sqrt(target_var / N);
        s.z_variance = (s.variance - target_var) / (target_var * std::sqrt(2.0 / (N - 1)));
    }
    if (ks && target_var > 0) {
        s.ks_stat = ks_statistic_normal(x, 0, std::sqrt(target_var));
        s.ks_p = ks_pvalue(s.ks_stat, x.size());
    }
    s.exact_zero = true;
    for (double v : x)
        if (v != 0.0) s.exact_zero = false;
    return s;
}

std::string idx(const std::string& name, int k) { return name + "_" + std::to_string(k); }

void fill_covariance(MomentReport& r, const std::vector<std::string>& names, const std::vector<std::vector<double>>& cols) {
    r.names = names;
    r.covariance.assign(cols.size(), std::vector<double>(cols.size()));
    for (size_t i = 0; i < cols.size(); ++i)
        for (size_t j = i; j < cols.size(); ++j) r.covariance[i][j] = r.covariance[j][i] = covariance(cols[i], cols[j]);
}

std::vector<double> column(const SampleSet& s, const std::vector<double> FluctuationFunctionals::*field, int k) {
    std::vector<double> out;
    out.reserve(s.values.size());
    for (const auto& f : s.values) out.push_back((f.*field)[k]);
    return out;
}

void require_samples(const SampleSet& s) {
    if (s.values.size() < 2) throw std::invalid_argument("need at least two samples");
}

}  // namespace

nlohmann::json to_json(const MonteCarloConfig& c) {
    return {{"n", c.n}, {"samples", c.samples}, {"kmax", c.kmax}, {"seed", c.seed}, {"threads", c.threads}};
}

std::vector<YoungDiagram> draw_diagrams(long n, long count, std::uint64_t seed, int threads) {
    std::vector<YoungDiagram> out(count);
    parallel_for(count, threads, [&](std::size_t i) { out[i] = sample(n, derive_seed(seed, i)); });
    return out;
}

SampleSet draw_samples(const MonteCarloConfig& config) {
    if (config.n < 1 || config.samples < 2) throw std::invalid_argument("draw_samples: n >= 1 and samples >= 2");
    SampleSet s;
    s.config = config;
    s.values.resize(config.samples);
    parallel_for(config.samples, config.threads, [&](std::size_t i) {
        s.values[i] = fluctuation_functionals(sample(config.n, derive_seed(config.seed, i)), config.kmax);
    });
    return s;
}

bool MomentReport::all_pass() const {
    for (const auto& c : criteria)
        if (!c.pass) return false;
    return true;
}

MomentReport run_clt_characters(const SampleSet& s) {
    require_samples(s);
    const int kmax = s.config.kmax;
    const double N = static_cast<double>(s.values.size());
    MomentReport r;
    r.kind = "clt-characters";
    r.config = s.config;
    r.tolerance_note = kTolerances;
    std::vector<std::vector<double>> cols;
    std::vector<std::string> names;
    for (int k = 2; k <= kmax; ++k) {
        cols.push_back(column(s, &FluctuationFunctionals::eta, k));
        names.push_back(idx("eta", k));
        r.stats.push_back(describe(names.back(), cols.back(), 1.0, true));
    }
    fill_covariance(r, names, cols);

    // Hermite products over rho with parts >= 2, |rho| <= 6
    for (int size = 2; size <= 6; ++size)
        for (const auto& rho : partitions_of(size)) {
            if (multiplicity(rho, 1) > 0 || rho.front() > kmax) continue;
            std::vector<double> v(s.values.size(), 1.0);
            double target = 1;
            std::string name = "hermite";
            for (int k = 2; k <= rho.front(); ++k) {
                int m = multiplicity(rho, k);
                if (!m) continue;
                Polynomial h = hermite_mod(m);
                for (size_t i = 0; i < v.size(); ++i) v[i] *= h(s.values[i].eta[k]);
                target *= factorial(m).get_d();
            }
            r.stats.push_back(describe(name + to_string(rho), v, target, false));
        }

    const double tol = 4 / std::sqrt(N);
    for (size_t i = 0; i < cols.size(); ++i) {
        const auto& st = r.stats[i];
        r.criteria.push_back(at_most("|mean(" + st.name + ")|", std::abs(st.mean), tol));
        r.criteria.push_back(at_most("|var(" + st.name + ") - 1|", std::abs(st.variance - 1), 0.15));
        r.criteria.push_back(above("KS p(" + st.name + ")", st.ks_p, 0.01));
    }
    for (size_t i = 0; i < cols.size(); ++i)
        for (size_t j = i + 1; j < cols.size(); ++j)
            r.criteria.push_back(at_most("|cov(" + names[i] + "," + names[j] + ")|", std::abs(r.covariance[i][j]), tol));
    return r;
}

MomentReport run_clt_shape(const SampleSet& s) {
    require_samples(s);
    const int kmax = s.config.kmax;
    const double N = static_cast<double>(s.values.size());
    MomentReport r;
    r.kind = "clt-shape";
    r.config = s.config;
    r.tolerance_note = kTolerances;
    std::vector<std::vector<double>> cols;
    std::vector<std::string> names;
    for (int k = 0; k <= kmax; ++k) {
        auto col = column(s, &FluctuationFunctionals::u, k);
        double target = k == 0 ? 0.0 : 1.0 / (k + 1);
        r.stats.push_back(describe(idx("u", k), col, target, k > 0));
        if (k == 0) continue;
        cols.push_back(std::move(col));
        names.push_back(idx("u", k));
    }
    fill_covariance(r, names, cols);

    r.criteria.push_back({"u_0 exactly zero", r.stats[0].exact_zero ? 1.0 : 0.0, 1, "==", r.stats[0].exact_zero});
    for (int k = 1; k <= std::min(kmax, 4); ++k) {
        const auto& st = r.stats[k];
        const double target = 1.0 / (k + 1);
        r.criteria.push_back(at_most("|var(" + st.name + ") - 1/(k+1)| / (1/(k+1))", std::abs(st.variance - target) / target, 0.15));
        r.criteria.push_back(at_most("|mean(" + st.name + ")|", std::abs(st.mean), 4 * std::sqrt(target / N)));
    }
    return r;
}

MomentReport run_clt_transition(const SampleSet& s) {
    require_samples(s);
    const int kmax = s.config.kmax;
    const double N = static_cast<double>(s.values.size());
    MomentReport r;
    r.kind = "clt-transition";
    r.config = s.config;
    r.tolerance_note = kTolerances;
    std::vector<std::vector<double>> cols;
    std::vector<std::string> names;
    for (int k = 1; k <= kmax; ++k) {
        auto col = column(s, &FluctuationFunctionals::t, k);
        double target = k <= 2 ? 0.0 : k - 1.0;
        r.stats.push_back(describe(idx("t", k), col, target, k >= 3));
        if (k < 3) continue;
        cols.push_back(std::move(col));
        names.push_back(idx("t", k));
    }
    fill_covariance(r, names, cols);

    for (int k = 1; k <= std::min(kmax, 2); ++k) {
        const auto& st = r.stats[k - 1];
        r.criteria.push_back({st.name + " exactly zero", st.exact_zero ? 1.0 : 0.0, 1, "==", st.exact_zero});
    }
    for (int k = 3; k <= kmax; ++k) {
        const auto& st = r.stats[k - 1];
        const double target = k - 1.0;
        r.criteria.push_back(at_most("|var(" + st.name + ") - (k-1)| / (k-1)", std::abs(st.variance - target) / target, 0.15));
        r.criteria.push_back(at_most("|mean(" + st.name + ")|", std::abs(st.mean), 4 * std::sqrt(target / N)));
    }
    if (kmax >= 3) {
        double c = correlation(column(s, &FluctuationFunctionals::t, 3), column(s, &FluctuationFunctionals::eta, 2));
        r.extra.push_back({"corr(t_3,eta_2)", c});
        r.criteria.push_back(at_most("|corr(t_3,eta_2) - 1|", std::abs(c - 1), 4 / std::sqrt(N)));
    }
    return r;
}

double lln_predicted_sd(int k, long n) {
    if (k < 2) throw std::invalid_argument("lln_predicted_sd: k >= 2");
    const int j = k - 1;
    double var_q = 0;
    for (int i = 0; 2 * i <= j - 2; ++i) {
        double c = binomial(j, i).get_d();
        var_q += c * c * (j - 2 * i);
    }
    return k * std::sqrt(var_q) / std::sqrt(static_cast<double>(n));
}

MomentReport run_lln(const MonteCarloConfig& config) {
    if (config.kmax < 2) throw std::invalid_argument("run_lln: kmax >= 2");
    const int kmax = config.kmax;
    const long n = config.n;
    MomentReport r;
    r.kind = "lln";
    r.config = config;
    r.tolerance_note =
        "thresholds are 5 times the predicted sd k sd(q_{k-1})/sqrt(n); the sup-distance bound is a regression bound "
        "from a calibration run";

    const int points = 4 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::vector<std::vector<double>> dev(kmax + 1, std::vector<double>(config.samples));
    std::vector<double> sup(config.samples);
    parallel_for(config.samples, config.threads, [&](std::size_t i) {
        YoungDiagram lambda = sample(n, derive_seed(config.seed, i));
        auto pt = ptilde_values(lambda, kmax);
        for (int k = 2; k <= kmax; ++k) {
            Rational diff = pt[k];
            if (k % 2 == 0) diff -= omega_moment(k) * Rational(power(BigInt(n), k / 2));
            dev[k][i] = scaled_to_double(diff, n, -k);
        }
        double m = 0;
        for (int j = 0; j < points; ++j) {
            double x = -2.5 + 5.0 * j / (points - 1);
            m = std::max(m, std::abs(rescaled_profile_value(lambda, x) - omega(x)));
        }
        sup[i] = m;
    });

    for (int k = 2; k <= kmax; ++k) {
        const double sd = lln_predicted_sd(k, n);
        auto st = describe("ptilde_" + std::to_string(k) + "[rescaled] - ptilde_" + std::to_string(k) + "[Omega]", dev[k], sd * sd, false);
        r.stats.push_back(st);
        std::vector<double> absdev;
        for (double v : dev[k]) absdev.push_back(std::abs(v));
        double med = median(absdev);
        r.extra.push_back({idx("median|dev|", k), med});
        r.extra.push_back({idx("q90|dev|", k), quantile(absdev, 0.9)});
        r.criteria.push_back(at_most(idx("median|ptilde[rescaled] - ptilde[Omega]|", k), med, 5 * sd));
    }
    r.stats.push_back(describe("sup|rescaled profile - Omega|", sup, 0, false));
    const double sup_med = median(sup);
    r.extra.push_back({"grid points", points});
    r.extra.push_back({"median sup-distance", sup_med});
    r.extra.push_back({"q10 sup-distance", quantile(sup, 0.1)});
    r.extra.push_back({"q90 sup-distance", quantile(sup, 0.9)});
    r.criteria.push_back(at_most("median sup-distance (regression bound)", sup_med, 0.35));
    return r;
}

// -- serialization

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

nlohmann::json MomentReport::to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["config"] = kerov::to_json(config);
    j["tolerance_note"] = tolerance_note;
    for (const auto& s : stats) {
        nlohmann::json e = {{"name", s.name},           {"mean", s.mean},
                            {"variance", s.variance},   {"stderr_mean", s.stderr_mean},
                            {"target_mean", s.target_mean}, {"target_variance", s.target_variance},
                            {"z_mean", s.z_mean},       {"z_variance", s.z_variance},
                            {"exact_zero", s.exact_zero}};
        if (s.ks_p >= 0) {
            e["ks_stat"] = s.ks_stat;
            e["ks_p"] = s.ks_p;
        }
        j["functionals"].push_back(e);
    }
    j["covariance"] = {{"names", names}, {"matrix", covariance}};
    for (const auto& [k, v] : extra) j["extra"][k] = v;
    for (const auto& c : criteria)
        j["criteria"].push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"relation", c.relation}, {"pass", c.pass}});
    j["pass"] = all_pass();
    return j;
}

std::string MomentReport::to_csv() const {
    std::ostringstream out;
    out << "# kind=" << kind << "\n";
    const auto cfg = kerov::to_json(config);
    for (const auto& [k, v] : cfg.items()) out << "# " << k << "=" << v.dump() << "\n";
    out << "name,n,N,mean,var,target,z-score,ks-stat\n";
    for (const auto& s : stats)
        out << s.name << "," << config.n << "," << config.samples << "," << format_double(s.mean) << ","
            << format_double(s.variance) << "," << format_double(s.target_variance) << "," << format_double(s.z_variance)
            << "," << (s.ks_stat >= 0 ? format_double(s.ks_stat) : "") << "\n";
    return out.str();
}

// -- character asymptotics

DiagramFamily blowup_family(const YoungDiagram& base) {
    DiagramFamily f;
    f.descriptor = "blowup of " + base.to_string();
    f.member = [base](long n) {
        const long b = base.size();
        long s = std::lround(std::sqrt(static_cast<double>(n) / b));
        if (s < 1 || b * s * s != n) throw std::invalid_argument("blowup family: n must be |base| s^2");
        std::vector<int> rows;
        for (int r : base.rows())
            for (long i = 0; i < s; ++i) rows.push_back(static_cast<int>(r * s));
        return YoungDiagram(rows);
    };
    return f;
}

DiagramFamily plancherel_family(std::uint64_t seed) {
    DiagramFamily f;
    f.descriptor = "plancherel sample, seed " + std::to_string(seed);
    f.member = [seed](long n) { return sample(n, derive_seed(seed, n)); };
    return f;
}

BianeReport biane_check(const DiagramFamily& family, const Partition& rho_in, const std::vector<long>& ns, double A) {
    const Partition rho = canonical(rho_in);
    if (rho.empty()) throw std::invalid_argument("biane_check: rho must be nonempty");
    BianeReport rep;
    rep.family = family.descriptor;
    rep.rho = rho;
    rep.A = A;
    const int r = size(rho), l = static_cast<int>(rho.size());
    for (long n : ns) {
        YoungDiagram lambda = family.member(n);
        const double bound = A * std::sqrt(static_cast<double>(n));
        if (lambda.size() != n || lambda.row(0) > bound || lambda.conjugate().row(0) > bound)
            throw std::domain_error("biane_check: member with n = " + std::to_string(n) + " is outside Y(A)");

        Rational ratio = character_ratio(lambda, rho);
        auto f = free_cumulants(lambda, rho.front() + 1);
        Rational lead = 1;  // prod f~_{j+1}(lambda)^{m_j}
        for (int j : rho) lead *= f[j + 1];
        Rational predicted = lead / Rational(power(BigInt(n), r));
        Rational residual = ratio - predicted;

        BianeEntry e;
        e.n = n;
        e.ratio = ratio.get_d();
        e.predicted = predicted.get_d();
        e.residual = residual.get_d();
        e.scaled_residual = scaled_to_double(residual, n, r - l + 2);
        e.proof_residual = scaled_to_double(Rational(falling_factorial(n, r)) * ratio - lead, n, -(r + l - 1));
        e.leading_constant = scaled_to_double(lead, n, -(r + l));
        rep.entries.push_back(e);
    }
    rep.pass = true;
    for (size_t i = 1; i < rep.entries.size(); ++i) {
        double a = std::abs(rep.entries[i - 1].scaled_residual), b = std::abs(rep.entries[i].scaled_residual);
        double g = a == 0 ? (b == 0 ? 0 : std::numeric_limits<double>::infinity()) : b / a;
        rep.growth.push_back(g);
        if (!(g <= rep.bound)) rep.pass = false;
    }
    return rep;
}

nlohmann::json BianeReport::to_json() const {
    nlohmann::json j;
    j["family"] = family;
    j["rho"] = to_string(rho);
    j["A"] = A;
    for (const auto& e : entries)
        j["entries"].push_back({{"n", e.n},
                                {"ratio", e.ratio},
                                {"predicted", e.predicted},
                                {"residual", e.residual},
                                {"scaled_residual", e.scaled_residual},
                                {"proof_residual", e.proof_residual},
                                {"leading_constant", e.leading_constant}});
    j["growth"] = growth;
    j["bound"] = bound;
    j["pass"] = pass;
    return j;
}

std::string BianeReport::to_csv() const {
    std::ostringstream out;
    out << "# family=" << family << "\n# rho=" << to_string(rho) << "\n# A=" << format_double(A) << "\n";
    out << "n,ratio,predicted,residual,scaled_residual,proof_residual,leading_constant\n";
    for (const auto& e : entries)
        out << e.n << "," << format_double(e.ratio) << "," << format_double(e.predicted) << "," << format_double(e.residual)
            << "," << format_double(e.scaled_residual) << "," << format_double(e.proof_residual) << ","
            << format_double(e.leading_constant) << "\n";
    return out.str();
}

// -- random series

double delta_truncation(const std::vector<double>& xi, double x) {
    const double th = std::acos(std::clamp(x / 2, -1.0, 1.0));
    double acc = 0;
    for (size_t k = 2; k < xi.size(); ++k) acc += xi[k] * std::sin(k * th) / std::sqrt(static_cast<double>(k));
    return acc / std::numbers::pi;
}

double delta_variance(int kmax, double x) {
    const double th = std::acos(std::clamp(x / 2, -1.0, 1.0));
    double acc = 0;
    for (int k = 2; k <= kmax; ++k) {
        double s = std::sin(k * th);
        acc += s * s / k;
    }
    return acc / (std::numbers::pi * std::numbers::pi);
}

std::vector<double> reference_coefficients(int kmax, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> xi(kmax + 1, 0.0);
    for (int k = 2; k <= kmax; ++k) xi[k] = rng.normal();
    return xi;
}

GaussianReference gaussian_reference(int kmax, int grid, std::uint64_t seed) {
    if (kmax < 2 || kmax > 200) throw std::invalid_argument("gaussian_reference: 2 <= kmax <= 200");
    if (grid < 1) throw std::invalid_argument("gaussian_reference: grid >= 1");
    GaussianReference g;
    g.kmax = kmax;
    g.seed = seed;
    const auto xi = reference_coefficients(kmax, seed);
    for (int i = 0; i < grid; ++i) {
        double x = -2 + 4 * (i + 0.5) / grid;
        double th = std::acos(x / 2);
        g.x.push_back(x);
        g.delta.push_back(delta_truncation(xi, x));
        // sum_{k>=3} sqrt(k-1) xi_{k-1} t_k(x) / (2 pi sqrt(4-x^2)), t_k(2 cos th) = 2 cos(k th)
        double acc = 0;
        for (int k = 3; k <= kmax + 1; ++k) acc += std::sqrt(k - 1.0) * xi[k - 1] * 2 * std::cos(k * th);
        g.delta_hat.push_back(acc / (2 * std::numbers::pi * std::sqrt(4 - x * x)));
    }
    return g;
}

}  // namespace kerov
