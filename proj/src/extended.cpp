#include "kerov/extended.hpp"

#include "kerov/algebra.hpp"
#include "kerov/polynomial.hpp"

namespace kerov {

bool ExtendedElement::KeyOrder::operator()(const Key& a, const Key& b) const {
    int da = size(a.first) + a.second, db = size(b.first) + b.second;
    if (da != db) return da > db;
    if (a.first != b.first) return MonomialOrder{}(a.first, b.first);
    return a.second > b.second;
}

ExtendedElement ExtendedElement::constant(const Rational& c) {
    ExtendedElement e;
    e.add_normalized({}, 0, c);
    return e;
}

void ExtendedElement::add_normalized(const Partition& rho, int half, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({rho, half}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExtendedElement ExtendedElement::raw(const Partition& rho_in, int half, const Rational& c) {
    ExtendedElement e;
    Partition rho = canonical(rho_in);
    Partition sigma = strip_ones(rho);
    const int j = static_cast<int>(rho.size() - sigma.size());
    const int s = size(sigma);
    // prod_{i<j} (P - s - i) as a polynomial in P = p#_1
    Polynomial poly = Polynomial::constant(1);
    for (int i = 0; i < j; ++i) poly = poly * Polynomial::linear_root(Rational(s + i));
    for (int d = 0; d <= poly.degree(); ++d) e.add_normalized(sigma, half + 2 * d, c * poly.coeff(d));
    return e;
}

ExtendedElement ExtendedElement::from_psharp(const Observable& e_in) {
    Observable e = to_basis(e_in, Basis::psharp);
    ExtendedElement out;
    for (const auto& [rho, c] : e.terms()) out += raw(rho, 0, c);
    return out;
}

Rational ExtendedElement::coefficient(const Partition& rho, int half) const {
    auto it = terms_.find({canonical(rho), half});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> ExtendedElement::deg1() const {
    if (terms_.empty()) return std::nullopt;
    const auto& k = terms_.begin()->first;  // ordered by degree
    return size(k.first) + k.second;
}

ExtendedElement& ExtendedElement::operator+=(const ExtendedElement& o) {
    for (const auto& [k, c] : o.terms_) add_normalized(k.first, k.second, c);
    return *this;
}

ExtendedElement& ExtendedElement::operator-=(const ExtendedElement& o) {
    for (const auto& [k, c] : o.terms_) add_normalized(k.first, k.second, -c);
    return *this;
}

ExtendedElement& ExtendedElement::operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

ExtendedElement ExtendedElement::shifted(int half) const {
    ExtendedElement e;
    for (const auto& [k, c] : terms_) e.add_normalized(k.first, k.second + half, c);
    return e;
}

std::string ExtendedElement::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        std::string body;
        if (!k.first.empty()) body = "p#" + to_string(k.first);
        if (k.second != 0) {
            if (!body.empty()) body += "·";
            body += "(p#1)^";
            body += k.second % 2 ? "(" + std::to_string(k.second) + "/2)" : "(" + std::to_string(k.second / 2) + ")";
        }
        if (body.empty()) out += mag.get_str();
        else if (mag == 1) out += body;
        else out += mag.get_str() + "·" + body;
    }
    return out;
}

ExtendedElement ext_normalize(const std::vector<std::tuple<Partition, int, Rational>>& raw_terms) {
    ExtendedElement e;
    for (const auto& [rho, half, c] : raw_terms) e += ExtendedElement::raw(rho, half, c);
    return e;
}

ExtendedElement ext_multiply(const ExtendedElement& a, const ExtendedElement& b) {
    ExtendedElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const int half = ka.second + kb.second;
            Rational c = ca * cb;
            if (ka.first.empty() || kb.first.empty()) {
                out += ExtendedElement::raw(ka.first.empty() ? kb.first : ka.first, half, c);
                continue;
            }
            for (const auto& [rho, f] : structure_constants(ka.first, kb.first)) out += ExtendedElement::raw(rho, half, c * f);
        }
    return out;
}

ExtendedElement ext_power(const ExtendedElement& a, int m) {
    ExtendedElement r = ExtendedElement::constant(1);
    for (int i = 0; i < m; ++i) r = ext_multiply(r, a);
    return r;
}

ExtendedElement eta_unscaled(const Partition& rho_in) {
    Partition rho = canonical(rho_in);
    int weight1 = size(rho) + multiplicity(rho, 1);
    return ExtendedElement::raw(rho, -weight1);
}

ExtendedElement xi(int k) { return ExtendedElement::raw({k}, -k); }

ExtendedElement ext_q(int k) {
    if (k < 1) throw std::invalid_argument("ext_q: k >= 1");
    ExtendedElement e = ExtendedElement::from_psharp(Observable::generator(Basis::ptilde, k + 1));
    if (k % 2) {
        int m = (k + 1) / 2;
        e -= ExtendedElement::p1_power(2 * m) * Rational(binomial(2 * m, m));
    }
    return (e * Rational(1, k + 1)).shifted(-k);
}

ExtendedElement ext_g(int k) {
    if (k < 2) throw std::invalid_argument("ext_g: k >= 2");
    ExtendedElement e = ExtendedElement::from_psharp(Observable::generator(Basis::htilde, k));
    if (k % 2 == 0) e -= ExtendedElement::p1_power(k) * Rational(catalan(k / 2));
    return e.shifted(-(k - 1));
}

}  // namespace kerov
