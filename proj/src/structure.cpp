#include "kerov/algebra.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

namespace kerov {

namespace {

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    Partition type;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    return canonical(std::move(type));
}

// all permutations of {0..t-1} of a given cycle type
const std::vector<std::vector<int>>& permutations_of_type(const Partition& type) {
    static std::mutex mu;
    static std::map<int, std::map<Partition, std::vector<std::vector<int>>>> by_size;
    const int t = size(type);
    std::lock_guard lock(mu);
    auto& table = by_size[t];
    if (table.empty()) {
        std::vector<int> perm(t);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            table[cycle_type(perm)].push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return table[type];
}

}  // namespace

BigInt count_quadruples(const Partition& rho_in, const Partition& sigma_in, const Partition& tau_in) {
    const Partition rho = canonical(rho_in), sigma = canonical(sigma_in), tau = canonical(tau_in);
    const int r = size(rho), a = size(sigma), b = size(tau);
    if (r < std::max(a, b) || r > a + b) return 0;
    if (r > 20) throw CapExceeded("count_quadruples: set too large");

    // the fixed permutation s: cycles of rho on consecutive points
    std::vector<int> s(r);
    for (int start = 0, i = 0; i < static_cast<int>(rho.size()); start += rho[i], ++i)
        for (int j = 0; j < rho[i]; ++j) s[start + j] = start + (j + 1) % rho[i];

    const Partition sigma_moving = strip_ones(sigma);
    const auto& taus = permutations_of_type(tau);
    BigInt total = 0;
    std::vector<int> elems, s2inv(r), s1(r);

    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        if (std::popcount(mask) != b) continue;
        elems.clear();
        for (int x = 0; x < r; ++x)
            if (mask >> x & 1) elems.push_back(x);
        for (const auto& pi : taus) {
            // s2 sends elems[i] to elems[pi[i]]; identity off X2
            std::iota(s2inv.begin(), s2inv.end(), 0);
            for (int i = 0; i < b; ++i) s2inv[elems[pi[i]]] = elems[i];
            // s1 = s s2^{-1}, so that applying s2 then s1 gives s
            int support = 0, forced = 0;
            for (int x = 0; x < r; ++x) {
                s1[x] = s[s2inv[x]];
                bool moved = s1[x] != x;
                support += moved;
                forced += moved || !(mask >> x & 1);
            }
            if (forced > a) continue;
            // cycle type of s1 on X1 = moving cycles plus a - support fixed points
            Partition moving = strip_ones(cycle_type(s1));
            if (moving != sigma_moving || a - support != multiplicity(sigma, 1)) continue;
            // X1 = forced points plus any a - forced of the remaining r - forced points
            total += binomial(r - forced, a - forced);
        }
    }
    return total;
}

Expansion structure_constants(const Partition& sigma_in, const Partition& tau_in) {
    static std::mutex mu;
    static std::map<std::pair<Partition, Partition>, Expansion> memo;
    const Partition sigma = canonical(sigma_in), tau = canonical(tau_in);
    const int a = size(sigma), b = size(tau);
    if (a + b > algebra_caps().structure_boxes)
        throw CapExceeded("structure constants: |sigma| + |tau| = " + std::to_string(a + b) + " exceeds cap " +
                          std::to_string(algebra_caps().structure_boxes));
    {
        std::lock_guard lock(mu);
        auto it = memo.find({sigma, tau});
        if (it != memo.end()) return it->second;
    }
    Expansion out;
    const BigInt zz = z_factor(sigma) * z_factor(tau);
    for (int r = std::max(a, b); r <= a + b; ++r) {
        for (const auto& rho : partitions_of(r)) {
            BigInt g = count_quadruples(rho, sigma, tau);
            if (g == 0) continue;
            Rational f(zz * g, z_factor(rho));
            f.canonicalize();
            out[rho] = f;
        }
    }
    std::lock_guard lock(mu);
    memo.emplace(std::make_pair(sigma, tau), out);
    return out;
}

Expansion structure_constants_by_expansion(const Partition& sigma, const Partition& tau) {
    Observable prod = psharp_rho_in_p(sigma) * psharp_rho_in_p(tau);
    Observable in_sharp = to_basis(prod, Basis::psharp);
    Expansion out;
    for (const auto& [rho, c] : in_sharp.terms()) out[rho] = c;
    return out;
}

Observable psharp_product(const Observable& a, const Observable& b) {
    if (a.basis() != Basis::psharp || b.basis() != Basis::psharp)
        throw std::invalid_argument("psharp_product: both factors must be in the psharp basis");
    Observable out(Basis::psharp);
    for (const auto& [sa, ca] : a.terms())
        for (const auto& [sb, cb] : b.terms()) {
            Rational c = ca * cb;
            for (const auto& [rho, f] : structure_constants(sa, sb)) out.add_term(rho, c * f);
        }
    return out;
}

std::string format_expansion(const Expansion& e) {
    std::string s;
    for (const auto& [rho, c] : e) {
        if (!s.empty()) s += ' ';
        s += to_string(rho) + ":" + c.get_str();
    }
    return s;
}

int filtration_weight(const Partition& rho, const IndexSet& J) {
    int w = size(rho);
    for (int p : rho)
        if (J.contains(p)) ++w;
    return w;
}

std::optional<int> filtration_degree(const Observable& e_in, const IndexSet& J) {
    Observable e = to_basis(e_in, Basis::psharp);
    std::optional<int> d;
    for (const auto& [rho, c] : e.terms()) {
        int w = filtration_weight(rho, J);
        if (!d || w > *d) d = w;
    }
    return d;
}

}  // namespace kerov
