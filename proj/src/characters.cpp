#include "kerov/characters.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace kerov {

BigInt dimension(const YoungDiagram& lambda) {
    const auto& r = lambda.rows();
    const auto& c = lambda.columns();
    BigInt hooks = 1;
    unsigned long chunk = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < r[i]; ++j) {
            unsigned long h = static_cast<unsigned long>(r[i] - j + c[j] - i - 1);
            if (chunk > (1UL << 40)) {
                hooks *= chunk;
                chunk = 1;
            }
            chunk *= h;
        }
    }
    hooks *= chunk;
    return factorial(lambda.size()) / hooks;
}

namespace {

// bounded memo keyed by (diagram rows, remaining non-trivial cycle lengths)
class CharacterCache {
public:
    static constexpr size_t kMaxEntries = 1 << 18;

    bool find(const std::string& key, BigInt& out) {
        std::shared_lock lock(mu_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const std::string& key, const BigInt& v) {
        std::unique_lock lock(mu_);
        if (table_.size() >= kMaxEntries) table_.clear();
        table_.emplace(key, v);
    }
    void clear() {
        std::unique_lock lock(mu_);
        table_.clear();
    }

private:
    std::shared_mutex mu_;
    std::unordered_map<std::string, BigInt> table_;
};

CharacterCache& cache() {
    static CharacterCache c;
    return c;
}

std::string cache_key(const std::vector<int>& rows, const Partition& parts, size_t from) {
    std::string key;
    key.reserve(4 * (rows.size() + parts.size()));
    for (int r : rows) key += std::to_string(r) + ',';
    key += '|';
    for (size_t i = from; i < parts.size(); ++i) key += std::to_string(parts[i]) + ',';
    return key;
}

// parts: non-trivial cycle lengths (decreasing); parts[from..] still to remove
BigInt mn_recurse(const std::vector<int>& rows, const Partition& parts, size_t from) {
    if (from == parts.size()) return dimension(YoungDiagram(rows));

    std::string key = cache_key(rows, parts, from);
    BigInt cached;
    if (cache().find(key, cached)) return cached;

    const int k = parts[from];
    const int l = static_cast<int>(rows.size());
    std::vector<int> beta(l);
    int top = 0;
    for (int i = 0; i < l; ++i) {
        beta[i] = rows[i] + (l - 1 - i);
        top = std::max(top, beta[i]);
    }
    std::vector<char> occupied(top + 1, 0);
    for (int b : beta) occupied[b] = 1;

    BigInt total = 0;
    for (int i = 0; i < l; ++i) {
        int b = beta[i];
        int t = b - k;
        if (t < 0 || occupied[t]) continue;
        int between = 0;
        for (int q = t + 1; q < b; ++q) between += occupied[q];
        std::vector<int> nb = beta;
        nb[i] = t;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> mu;
        for (int j = 0; j < l; ++j) {
            int part = nb[j] - (l - 1 - j);
            if (part > 0) mu.push_back(part);
        }
        BigInt sub = mn_recurse(mu, parts, from + 1);
        if (between % 2) total -= sub;
        else total += sub;
    }
    cache().insert(key, total);
    return total;
}

}  // namespace

BigInt character(const YoungDiagram& lambda, const Partition& rho) {
    if (size(rho) != lambda.size()) throw std::invalid_argument("character: |rho| != |lambda|");
    Partition parts = canonical(strip_ones(rho));
    return mn_recurse(lambda.rows(), parts, 0);
}

Rational character_ratio(const YoungDiagram& lambda, const Partition& rho) {
    const int r = size(rho);
    if (r > lambda.size()) throw std::invalid_argument("character_ratio: |rho| > |lambda|");
    Partition parts = canonical(strip_ones(rho));
    Rational q(mn_recurse(lambda.rows(), parts, 0), dimension(lambda));
    q.canonicalize();
    return q;
}

Rational plancherel_weight(const YoungDiagram& lambda) {
    BigInt d = dimension(lambda);
    Rational w(d * d, factorial(lambda.size()));
    w.canonicalize();
    return w;
}

void clear_character_cache() { cache().clear(); }

}  // namespace kerov
