#pragma once

#include <cstddef>
#include <vector>

namespace kerov {

// compensated (Neumaier) summation
class NeumaierSum {
public:
    void add(double x);
    void merge(const NeumaierSum& o);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0, comp_ = 0;
};

double mean(const std::vector<double>& x);
double variance(const std::vector<double>& x);  // unbiased
double covariance(const std::vector<double>& x, const std::vector<double>& y);
double correlation(const std::vector<double>& x, const std::vector<double>& y);
// linear interpolation between order statistics
double quantile(std::vector<double> x, double p);
double median(std::vector<double> x);

double normal_cdf(double x);
// sup |F_N - Phi((x - mu)/sigma)|
double ks_statistic_normal(std::vector<double> x, double mu = 0, double sigma = 1);
// asymptotic Kolmogorov p-value with the usual small-sample correction of the argument
double ks_pvalue(double d, std::size_t n);

}  // namespace kerov
