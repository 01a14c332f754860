#include "kerov/identities.hpp"
#include "kerov/partitions.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace kerov;

namespace {

YoungDiagram Y(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }

// transpose the cell set
YoungDiagram transpose_cells(const YoungDiagram& l) {
    std::set<std::pair<int, int>> cells;
    for (int i = 0; i < l.length(); ++i)
        for (int j = 0; j < l.row(i); ++j) cells.insert({j, i});
    std::vector<int> rows;
    for (auto [r, c] : cells) {
        if (r >= static_cast<int>(rows.size())) rows.resize(r + 1, 0);
        ++rows[r];
    }
    return YoungDiagram(rows);
}

// addable / removable cells, read off the cell set
InterlacingExtrema corners(const YoungDiagram& l) {
    InterlacingExtrema e;
    for (int i = 0; i <= l.length(); ++i) {
        int j = l.row(i);
        bool addable = i == 0 || l.row(i - 1) > j;
        if (addable) e.minima.push_back(j - i);
        if (j > 0 && l.row(i + 1) < j) e.maxima.push_back(j - 1 - i);
    }
    std::sort(e.minima.begin(), e.minima.end());
    std::sort(e.maxima.begin(), e.maxima.end());
    return e;
}

// walk the boundary: vertices (r, s) -> (s - r, s + r)
double profile_by_path(const YoungDiagram& l, double x) {
    std::vector<std::pair<double, double>> v;
    int L = l.length();
    v.push_back({-L - 1.0, L + 1.0});
    v.push_back({-L * 1.0, L * 1.0});
    for (int i = L; i >= 1; --i) {
        int s = l.row(i - 1);
        v.push_back({static_cast<double>(s - i), static_cast<double>(s + i)});
        v.push_back({static_cast<double>(s - (i - 1)), static_cast<double>(s + i - 1)});
    }
    double last = l.empty() ? 0 : l.row(0);
    v.push_back({last + 1, last + 1});
    if (x <= v.front().first || x >= v.back().first) return std::abs(x);
    for (size_t i = 1; i < v.size(); ++i)
        if (x <= v[i].first && v[i].first > v[i - 1].first) {
            double t = (x - v[i - 1].first) / (v[i].first - v[i - 1].first);
            return v[i - 1].second + t * (v[i].second - v[i - 1].second);
        }
    return std::abs(x);
}

long count_partitions(int n, int max_part) {
    if (n == 0) return 1;
    long c = 0;
    for (int k = std::min(n, max_part); k >= 1; --k) c += count_partitions(n - k, k);
    return c;
}

}  // namespace

TEST_CASE("conjugate examples") {
    CHECK(Y({3, 1}).conjugate() == Y({2, 1, 1}));
    CHECK(Y({2, 1}).conjugate() == Y({2, 1}));
    CHECK(Y({}).conjugate() == Y({}));
}

TEST_CASE("conjugate agrees with transposing cells") {
    for (const auto& l : diagrams_up_to(10)) CHECK(l.conjugate() == transpose_cells(l));
}

TEST_CASE("frobenius examples") {
    auto f = frobenius_coords(Y({3, 1}));
    REQUIRE(f.rank() == 1);
    CHECK(f.a(0) == Rational(5, 2));
    CHECK(f.b(0) == Rational(3, 2));
    f = frobenius_coords(Y({1}));
    CHECK(f.a(0) == Rational(1, 2));
    CHECK(f.b(0) == Rational(1, 2));
    CHECK(frobenius_coords(Y({})).rank() == 0);
}

TEST_CASE("frobenius coordinates: half-integers, strictly decreasing, summing to n") {
    for (const auto& l : diagrams_up_to(12)) {
        auto f = frobenius_coords(l);
        Rational s = 0;
        for (int i = 0; i < f.rank(); ++i) {
            CHECK(f.twice_a[i] % 2 == 1);
            CHECK(f.twice_b[i] % 2 == 1);
            if (i > 0) CHECK((f.twice_a[i] < f.twice_a[i - 1] && f.twice_b[i] < f.twice_b[i - 1]));
            CHECK(f.twice_a[i] == 2 * (l.row(i) - i - 1) + 1);
            s += f.a(i) + f.b(i);
        }
        CHECK(s == l.size());
    }
}

TEST_CASE("profile extrema examples") {
    CHECK(profile_extrema(Y({2, 1})) == InterlacingExtrema{{-2, 0, 2}, {-1, 1}});
    CHECK(profile_extrema(Y({2})) == InterlacingExtrema{{-1, 2}, {1}});
    CHECK(profile_extrema(Y({})) == InterlacingExtrema{{0}, {}});
}

TEST_CASE("extrema equal addable and removable corner contents, and interlace") {
    for (const auto& l : diagrams_up_to(12)) {
        auto e = profile_extrema(l);
        CHECK(e == corners(l));
        REQUIRE(e.minima.size() == e.maxima.size() + 1);
        long sum = 0;
        for (size_t i = 0; i < e.maxima.size(); ++i) {
            CHECK(e.minima[i] < e.maxima[i]);
            CHECK(e.maxima[i] < e.minima[i + 1]);
            sum += e.minima[i] - e.maxima[i];
        }
        CHECK(sum + e.minima.back() == 0);
        CHECK(from_extrema(e) == l);
    }
}

TEST_CASE("from_extrema examples and rejections") {
    CHECK(from_extrema({{-2, 0, 2}, {-1, 1}}) == Y({2, 1}));
    CHECK(from_extrema({{0}, {}}) == Y({}));
    CHECK(from_extrema({{-1, 1}, {0}}) == Y({1}));
    CHECK_THROWS(from_extrema({{-1, 2}, {0}}));     // nonzero sum
    CHECK_THROWS(from_extrema({{0, -1}, {1}}));     // not interlacing
    CHECK_THROWS(from_extrema({{-2, 2}, {0, 1}}));  // wrong lengths
}

TEST_CASE("profile values") {
    CHECK(profile_value(Y({}), 0.7) == doctest::Approx(0.7));
    // the single box has its top corner at x = 0, y = r + s = 2
    CHECK(profile_value(Y({1}), 0.0) == 2.0);
    CHECK(profile_value(Y({2, 1}), 2.0) == 2.0);
    for (const auto& l : diagrams_up_to(8))
        for (double x = -10; x <= 10; x += 0.125) CHECK(profile_value(l, x) == doctest::Approx(profile_by_path(l, x)));
}

TEST_CASE("rescaled profile") {
    auto l = Y({4, 3, 1});
    double s = std::sqrt(8.0);
    for (double x = -3; x <= 3; x += 0.1) CHECK(rescaled_profile_value(l, x) == doctest::Approx(profile_value(l, s * x) / s));
}

TEST_CASE("enumeration") {
    CHECK(enumerate_partitions(0) == std::vector<YoungDiagram>{Y({})});
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == 42);
    for (int n = 0; n <= 16; ++n) {
        auto ps = enumerate_partitions(n);
        CHECK(static_cast<long>(ps.size()) == count_partitions(n, n));
        for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i] < ps[i - 1]);  // reverse-lexicographic, no repeats
        for (const auto& l : ps) CHECK(l.size() == n);
    }
    CHECK_THROWS_AS(enumerate_partitions(41), CapExceeded);
}

TEST_CASE("text form") {
    CHECK(Y({3, 1}).to_string() == "3,1");
    CHECK(Y({}).to_string() == "-");
    CHECK(YoungDiagram::parse("3,1") == Y({3, 1}));
}

TEST_CASE("invalid rows are rejected") {
    CHECK_THROWS(Y({1, 2}));
    CHECK_THROWS(Y({2, 0}));
    CHECK_THROWS(YoungDiagram::parse("2,x"));
}

TEST_CASE("identity group: partitions") {
    auto r = run_identities({}, {"partitions"});
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.first_failure);
        CHECK(c.pass());
    }
}
