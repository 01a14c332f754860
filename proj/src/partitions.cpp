#include "kerov/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>

namespace kerov {

// -- index partitions

int size(const Partition& rho) {
    int s = 0;
    for (int p : rho) s += p;
    return s;
}

int multiplicity(const Partition& rho, int part) {
    return static_cast<int>(std::count(rho.begin(), rho.end(), part));
}

Partition canonical(Partition rho) {
    std::erase_if(rho, [](int p) { return p <= 0; });
    std::sort(rho.begin(), rho.end(), std::greater<>());
    return rho;
}

Partition join(const Partition& a, const Partition& b) {
    Partition r = a;
    r.insert(r.end(), b.begin(), b.end());
    return canonical(std::move(r));
}

Partition ones(int r) { return Partition(std::max(r, 0), 1); }

Partition strip_ones(const Partition& rho) {
    Partition r;
    for (int p : rho)
        if (p != 1) r.push_back(p);
    return r;
}

BigInt z_factor(const Partition& rho) {
    std::map<int, int> m;
    for (int p : rho) ++m[p];
    BigInt z = 1;
    for (auto [k, c] : m) z *= power(BigInt(k), c) * factorial(c);
    return z;
}

int sign(const Partition& rho) {
    return ((size(rho) - static_cast<int>(rho.size())) % 2 == 0) ? 1 : -1;
}

std::string to_string(const Partition& rho) {
    std::string s = "(";
    for (size_t i = 0; i < rho.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rho[i]);
    }
    return s + ")";
}

namespace {

void gen_partitions(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto block = partitions_of(k);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

// -- diagrams

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw std::invalid_argument("diagram rows must be positive");
        if (i && rows_[i] > rows_[i - 1]) throw std::invalid_argument("diagram rows must be weakly decreasing");
        n_ += rows_[i];
    }
    if (!rows_.empty()) {
        cols_.assign(rows_[0], 0);
        for (int r : rows_)
            for (int j = 0; j < r; ++j) ++cols_[j];
    }
}

YoungDiagram YoungDiagram::conjugate() const { return YoungDiagram(cols_); }

std::string YoungDiagram::to_string() const {
    if (rows_.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rows_[i]);
    }
    return s;
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text == "-" || text.empty()) return {};
    std::vector<int> rows;
    while (true) {
        auto comma = text.find(',');
        auto tok = text.substr(0, comma);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw std::invalid_argument("bad diagram text: " + std::string(text));
        rows.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return YoungDiagram(std::move(rows));
}

FrobeniusCoords frobenius_coords(const YoungDiagram& lambda) {
    FrobeniusCoords f;
    const auto& r = lambda.rows();
    const auto& c = lambda.columns();
    for (int i = 0; i < lambda.length() && r[i] > i; ++i) {
        f.twice_a.push_back(2 * (r[i] - i) - 1);
        f.twice_b.push_back(2 * (c[i] - i) - 1);
    }
    return f;
}

InterlacingExtrema profile_extrema(const YoungDiagram& lambda) {
    InterlacingExtrema e;
    const int l = lambda.length();
    // walk rows bottom to top so contents come out increasing
    e.minima.push_back(-l);
    for (int i = l - 1; i >= 0; --i) {
        int below = lambda.row(i + 1);
        int r = lambda.row(i);
        if (r > below) e.maxima.push_back(r - 1 - i);
        if (i == 0 || r < lambda.row(i - 1)) e.minima.push_back(r - i);
    }
    return e;
}

YoungDiagram from_extrema(const InterlacingExtrema& e) {
    const auto& x = e.minima;
    const auto& y = e.maxima;
    if (x.size() != y.size() + 1) throw std::invalid_argument("extrema: need m+1 minima and m maxima");
    long balance = 0;
    for (size_t i = 0; i < y.size(); ++i) {
        if (!(x[i] < y[i] && y[i] < x[i + 1])) throw std::invalid_argument("extrema do not interlace");
        balance += x[i] - y[i];
    }
    balance += x.back();
    if (balance != 0) throw std::invalid_argument("extrema: sum of minima minus maxima must vanish");

    // trace the boundary: horizontal runs x_i -> y_i, vertical runs y_i -> x_{i+1}
    std::vector<int> rows;
    int r = -x[0];
    int s = 0;
    for (size_t i = 0; i < y.size(); ++i) {
        s += y[i] - x[i];
        int up = x[i + 1] - y[i];
        for (int k = 0; k < up; ++k) rows.push_back(s);
        r -= up;
    }
    if (r != 0 || (x.size() == 1 && x[0] != 0)) throw std::invalid_argument("extrema do not close up");
    std::reverse(rows.begin(), rows.end());
    return YoungDiagram(std::move(rows));
}

double profile_value(const YoungDiagram& lambda, double x) {
    return profile_value(profile_extrema(lambda), x);
}

// slope -1 left of x_1, then alternating +1/-1 at each extremum
double profile_value(const InterlacingExtrema& e, double x) {
    const auto& xs = e.minima;
    const auto& ys = e.maxima;
    if (x <= xs.front()) return std::abs(x);
    if (x >= xs.back()) return std::abs(x);
    double v = std::abs(static_cast<double>(xs.front()));
    double pos = xs.front();
    for (size_t i = 0; i < ys.size(); ++i) {
        // rising to y_i
        if (x <= ys[i]) return v + (x - pos);
        v += ys[i] - pos;
        pos = ys[i];
        // falling to x_{i+1}
        if (x <= xs[i + 1]) return v - (x - pos);
        v -= xs[i + 1] - pos;
        pos = xs[i + 1];
    }
    return std::abs(x);
}

double rescaled_profile_value(const YoungDiagram& lambda, double x) {
    if (lambda.empty()) return std::abs(x);
    double s = std::sqrt(static_cast<double>(lambda.size()));
    return profile_value(lambda, x * s) / s;
}

std::vector<YoungDiagram> enumerate_partitions(int n, int cap) {
    if (n < 0) throw std::invalid_argument("negative size");
    if (n > cap) throw CapExceeded("partition enumeration cap exceeded: " + std::to_string(n) + " > " + std::to_string(cap));
    std::vector<YoungDiagram> out;
    for (auto& p : partitions_of(n)) out.emplace_back(std::move(p));
    return out;
}

std::vector<YoungDiagram> diagrams_up_to(int n, int cap) {
    std::vector<YoungDiagram> out;
    for (int k = 0; k <= n; ++k) {
        auto block = enumerate_partitions(k, cap);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

}  // namespace kerov
