#pragma once

#include "kerov/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kerov {

// A partition used as an index (cycle type, exponent multi-index): parts in
// weakly decreasing order, no zeros.
using Partition = std::vector<int>;

int size(const Partition& rho);
int multiplicity(const Partition& rho, int part);
Partition canonical(Partition rho);  // sort decreasing, drop zeros
Partition join(const Partition& a, const Partition& b);
Partition ones(int r);
Partition strip_ones(const Partition& rho);
BigInt z_factor(const Partition& rho);  // centralizer order prod k^{m_k} m_k!
int sign(const Partition& rho);         // (-1)^{|rho| - l(rho)}
std::string to_string(const Partition& rho);  // "(2,1)", "()" for empty
std::vector<Partition> partitions_of(int n);  // reverse-lexicographic
std::vector<Partition> partitions_up_to(int n);  // sizes 0..n, each block reverse-lex

class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& columns() const { return cols_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(rows_.size()); }
    int row(int i) const { return i < length() ? rows_[i] : 0; }
    bool empty() const { return n_ == 0; }

    YoungDiagram conjugate() const;

    std::string to_string() const;  // "3,1", "-" for the empty diagram
    static YoungDiagram parse(std::string_view text);

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ == b.rows_; }
    friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<int> rows_;
    std::vector<int> cols_;
    int n_ = 0;
};

// Modified Frobenius coordinates, stored doubled: twice_a[i] = 2 lambda_i - 2i + 1 (1-based i).
struct FrobeniusCoords {
    std::vector<int> twice_a;
    std::vector<int> twice_b;

    int rank() const { return static_cast<int>(twice_a.size()); }
    Rational a(int i) const { return Rational(twice_a[i], 2); }
    Rational b(int i) const { return Rational(twice_b[i], 2); }
};

// Local minima x (contents of addable cells) and maxima y (contents of
// removable cells) of the profile, both increasing.
struct InterlacingExtrema {
    std::vector<int> minima;
    std::vector<int> maxima;

    bool operator==(const InterlacingExtrema&) const = default;
};

FrobeniusCoords frobenius_coords(const YoungDiagram& lambda);
InterlacingExtrema profile_extrema(const YoungDiagram& lambda);
YoungDiagram from_extrema(const InterlacingExtrema& e);
double profile_value(const YoungDiagram& lambda, double x);
double profile_value(const InterlacingExtrema& e, double x);
// profile of the rescaled diagram: x -> lambda(sqrt(n) x) / sqrt(n)
double rescaled_profile_value(const YoungDiagram& lambda, double x);

struct CapExceeded : std::length_error {
    using std::length_error::length_error;
};

inline constexpr int kDefaultPartitionCap = 40;
std::vector<YoungDiagram> enumerate_partitions(int n, int cap = kDefaultPartitionCap);
std::vector<YoungDiagram> diagrams_up_to(int n, int cap = kDefaultPartitionCap);

}  // namespace kerov
