#include "kerov/observable.hpp"

#include "kerov/algebra.hpp"

#include <stdexcept>

namespace kerov {

std::string basis_tag(Basis b) {
    switch (b) {
    case Basis::p: return "p";
    case Basis::ptilde: return "pt";
    case Basis::htilde: return "ht";
    case Basis::psharp: return "p#";
    case Basis::ftilde: return "ft";
    }
    return "?";
}

Basis parse_basis_tag(const std::string& tag) {
    if (tag == "p") return Basis::p;
    if (tag == "pt") return Basis::ptilde;
    if (tag == "ht") return Basis::htilde;
    if (tag == "p#") return Basis::psharp;
    if (tag == "ft") return Basis::ftilde;
    throw std::invalid_argument("unknown basis tag: " + tag);
}

bool MonomialOrder::operator()(const Partition& a, const Partition& b) const {
    int sa = size(a), sb = size(b);
    if (sa != sb) return sa > sb;
    return b < a;
}

Observable Observable::constant(Basis b, const Rational& c) {
    Observable e(b);
    e.add_term({}, c);
    return e;
}

Observable Observable::generator(Basis b, int k) {
    if (k < 1) throw std::invalid_argument("generator index must be positive");
    return term(b, {k});
}

Observable Observable::term(Basis b, Partition key, const Rational& c) {
    Observable e(b);
    e.add_term(std::move(key), c);
    return e;
}

Rational Observable::coefficient(const Partition& key) const {
    auto it = terms_.find(canonical(key));
    return it == terms_.end() ? Rational(0) : it->second;
}

int Observable::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, size(k));
    return d;
}

void Observable::add_term(Partition key, const Rational& c) {
    if (c == 0) return;
    key = canonical(std::move(key));
    if (basis_ == Basis::ptilde || basis_ == Basis::htilde || basis_ == Basis::ftilde) {
        // these families start at index 2 (index 1 is identically zero)
        for (int k : key)
            if (k == 1) return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Observable::check_same(const Observable& o) const {
    if (o.basis_ != basis_) throw std::invalid_argument("observables in different bases: " + basis_tag(basis_) + " vs " + basis_tag(o.basis_));
}

Observable& Observable::operator+=(const Observable& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Observable& Observable::operator-=(const Observable& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Observable& Observable::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

Observable& Observable::operator+=(const Rational& c) {
    add_term({}, c);
    return *this;
}

Observable& Observable::operator-=(const Rational& c) {
    add_term({}, -c);
    return *this;
}

Observable Observable::operator-() const {
    Observable r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Observable operator*(const Observable& a, const Observable& b) {
    a.check_same(b);
    if (a.basis_ == Basis::psharp) return psharp_product(a, b);
    Observable r(a.basis_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(join(ka, kb), ca * cb);
    return r;
}

Observable power(const Observable& e, int m) {
    if (m < 0) throw std::invalid_argument("negative power of an observable");
    Observable r = Observable::constant(e.basis(), 1);
    for (int i = 0; i < m; ++i) r = r * e;
    return r;
}

namespace {

const char* kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string digits(int v, const char** table) {
    std::string s;
    for (char ch : std::to_string(v)) s += table[ch - '0'];
    return s;
}

std::string symbol(Basis b) {
    switch (b) {
    case Basis::p: return "p";
    case Basis::ptilde: return "p̃";
    case Basis::htilde: return "h̃";
    case Basis::psharp: return "p#";
    case Basis::ftilde: return "f̃";
    }
    return "?";
}

std::string monomial_text(Basis b, const Partition& key) {
    if (b == Basis::psharp) {
        if (key.size() == 1) return "p#" + digits(key[0], kSub);
        return "p#" + to_string(key);
    }
    std::string s;
    for (size_t i = 0; i < key.size();) {
        size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        if (!s.empty()) s += "·";
        s += symbol(b) + digits(key[i], kSub);
        if (j - i > 1) s += digits(static_cast<int>(j - i), kSup);
        i = j;
    }
    return s;
}

}  // namespace

std::string Observable::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (key.empty()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "·";
        out += monomial_text(basis_, key);
    }
    return out;
}

}  // namespace kerov
