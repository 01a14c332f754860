#include "kerov/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kerov {

void NeumaierSum::add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
}

void NeumaierSum::merge(const NeumaierSum& o) {
    add(o.sum_);
    add(o.comp_);
}

double mean(const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("mean of an empty sample");
    NeumaierSum s;
    for (double v : x) s.add(v);
    return s.value() / static_cast<double>(x.size());
}

double covariance(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("covariance needs two equal samples of size >= 2");
    const double mx = mean(x), my = mean(y);
    NeumaierSum s;
    for (size_t i = 0; i < x.size(); ++i) s.add((x[i] - mx) * (y[i] - my));
    return s.value() / static_cast<double>(x.size() - 1);
}

double variance(const std::vector<double>& x) { return covariance(x, x); }

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
    double vx = variance(x), vy = variance(y);
    if (vx == 0 || vy == 0) return 0;
    return covariance(x, y) / std::sqrt(vx * vy);
}

double quantile(std::vector<double> x, double p) {
    if (x.empty()) throw std::invalid_argument("quantile of an empty sample");
    std::sort(x.begin(), x.end());
    double h = p * static_cast<double>(x.size() - 1);
    size_t lo = static_cast<size_t>(std::floor(h));
    size_t hi = std::min(lo + 1, x.size() - 1);
    return x[lo] + (h - static_cast<double>(lo)) * (x[hi] - x[lo]);
}

double median(std::vector<double> x) { return quantile(std::move(x), 0.5); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_statistic_normal(std::vector<double> x, double mu, double sigma) {
    if (x.empty()) throw std::invalid_argument("KS statistic of an empty sample");
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double f = normal_cdf((x[i] - mu) / sigma);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

double ks_pvalue(double d, std::size_t n) {
    const double sn = std::sqrt(static_cast<double>(n));
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    if (lambda < 1e-3) return 1.0;
    double q = 0, term_prev = 0;
    for (int j = 1; j <= 200; ++j) {
        double term = 2 * ((j % 2) ? 1 : -1) * std::exp(-2.0 * j * j * lambda * lambda);
        q += term;
        if (std::abs(term) <= 1e-12 * std::abs(q) || std::abs(term) <= 1e-16 * term_prev) break;
        term_prev = std::abs(term);
    }
    return std::clamp(q, 0.0, 1.0);
}

}  // namespace kerov
