#pragma once

#include "kerov/observables.hpp"
#include "kerov/partitions.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kerov {

struct MonteCarloConfig {
    long n = 4000;
    long samples = 4000;
    int kmax = 5;
    std::uint64_t seed = 20010601;
    int threads = 0;  // 0: KEROV_THREADS or the hardware count
};

nlohmann::json to_json(const MonteCarloConfig& c);

// sample i is drawn with seed derive_seed(seed, i)
std::vector<YoungDiagram> draw_diagrams(long n, long count, std::uint64_t seed, int threads);

struct SampleSet {
    MonteCarloConfig config;
    std::vector<FluctuationFunctionals> values;
};

SampleSet draw_samples(const MonteCarloConfig& config);

struct FunctionalStat {
    std::string name;
    double mean = 0, variance = 0, stderr_mean = 0;
    double target_mean = 0, target_variance = 0;
    double z_mean = 0, z_variance = 0;  // in units of the Gaussian sampling error
    double ks_stat = -1, ks_p = -1;     // -1 when no KS test applies
    bool exact_zero = false;            // every sample equals 0 exactly
};

struct Criterion {
    std::string name;
    double value = 0;
    double threshold = 0;
    std::string relation;  // how value is compared with threshold
    bool pass = false;
};

struct MomentReport {
    std::string kind;
    MonteCarloConfig config;
    std::vector<FunctionalStat> stats;
    std::vector<std::string> names;  // rows/columns of the covariance matrix
    std::vector<std::vector<double>> covariance;
    std::vector<std::pair<std::string, double>> extra;
    std::vector<Criterion> criteria;
    std::string tolerance_note;

    bool all_pass() const;
    nlohmann::json to_json() const;
    std::string to_csv() const;
};

MomentReport run_clt_characters(const SampleSet& s);
MomentReport run_clt_shape(const SampleSet& s);
MomentReport run_clt_transition(const SampleSet& s);
MomentReport run_lln(const MonteCarloConfig& config);

// sd of p~_k[rescaled lambda] predicted by the Gaussian limit: k sd(q_{k-1}) / sqrt(n)
double lln_predicted_sd(int k, long n);

// -- character asymptotics

struct DiagramFamily {
    std::string descriptor;
    std::function<YoungDiagram(long n)> member;
};

// base diagram with every box replaced by an s x s block; defined for n = |base| s^2
DiagramFamily blowup_family(const YoungDiagram& base);
DiagramFamily plancherel_family(std::uint64_t seed);

struct BianeEntry {
    long n = 0;
    double ratio = 0;      // chi^lambda at rho u 1^{n-|rho|} over dim lambda
    double predicted = 0;  // n^{-(|rho|-l)/2} prod f~_{j+1}[rescaled]^{m_j}
    double residual = 0;
    double scaled_residual = 0;  // residual n^{(|rho|-l)/2 + 1}
    double proof_residual = 0;   // (p#_rho - prod f~_{j+1}^{m_j}) n^{-(|rho|+l-1)/2}
    double leading_constant = 0;  // prod f~_{j+1}[rescaled]^{m_j}
};

struct BianeReport {
    std::string family;
    Partition rho;
    double A = 3;
    std::vector<BianeEntry> entries;
    std::vector<double> growth;  // |scaled residual| ratios of consecutive entries
    double bound = 1.5;
    bool pass = false;

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

// throws std::domain_error when a member leaves Y(A)
BianeReport biane_check(const DiagramFamily& family, const Partition& rho, const std::vector<long>& ns, double A = 3);

// -- truncated random series for plot overlays

struct GaussianReference {
    int kmax = 0;
    std::uint64_t seed = 0;
    std::vector<double> x, delta, delta_hat;
};

// Delta(2 cos th) = (1/pi) sum_{k=2}^{kmax} xi_k sin(k th)/sqrt(k) and the companion
// series in t_k/sqrt(4-x^2), on `grid` midpoints of (-2,2)
// the xi_k, k = 2..kmax, used by gaussian_reference for this seed
std::vector<double> reference_coefficients(int kmax, std::uint64_t seed);
GaussianReference gaussian_reference(int kmax, int grid, std::uint64_t seed);
double delta_truncation(const std::vector<double>& xi, double x);  // xi indexed by k
double delta_variance(int kmax, double x);                          // analytic variance of the truncation

// 17 significant digits, '.' decimal point, no locale
std::string format_double(double x);

}  // namespace kerov
