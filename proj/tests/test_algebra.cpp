#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ginlex/coordinates.hpp"
#include "ginlex/linalg.hpp"
#include "ginlex/monomial.hpp"
#include "ginlex/polynomial.hpp"
#include "ginlex/term_order.hpp"

using namespace ginlex;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Monomial random_monomial(int n, int d, std::mt19937_64& rng) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < d; ++k) e[static_cast<size_t>(pick(rng))]++;
    return Monomial(std::move(e));
}

Polynomial random_poly(int n, int d, int terms, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        ts.push_back({Rat(c), random_monomial(n, d, rng)});
    }
    return Polynomial(std::move(ts));
}

}  // namespace

TEST_CASE("term order comparisons") {
    auto x1x3 = mono({1, 0, 1});
    auto x2sq = mono({0, 2, 0});
    CHECK(TermOrder::lex().compare(x1x3, x2sq) == Cmp::greater);
    CHECK(TermOrder::revlex().compare(x1x3, x2sq) == Cmp::less);

    auto w = TermOrder::weight({6, 5, 2, 1});
    auto a = mono({1, 0, 2, 0});  // x1*x3^2, weight 10
    auto b = mono({0, 2, 0, 1});  // x2^2*x4, weight 11
    CHECK(w.compare(a, b) == Cmp::less);

    CHECK_THROWS(TermOrder::weight({1, 2, 3}));    // not decreasing
    CHECK_THROWS(TermOrder::weight({3, 2, 0}));    // not positive
    CHECK_THROWS(TermOrder::lex().compare(x1x3, mono({1, 0})));
}

TEST_CASE("borel order") {
    CHECK(borel_compare(mono({2, 0, 0}), mono({1, 1, 0})) == BorelCmp::greater);
    CHECK(borel_compare(mono({1, 0, 1}), mono({0, 2, 0})) == BorelCmp::incomparable);
    CHECK(borel_compare(mono({1, 0, 1}), mono({1, 0, 1})) == BorelCmp::equal);
    CHECK_THROWS(borel_compare(mono({1, 0, 0}), mono({0, 2, 0})));
}

TEST_CASE("order properties: antisymmetry, transitivity, multiplicativity") {
    std::mt19937_64 rng(42);
    std::vector<TermOrder> orders{TermOrder::lex(), TermOrder::revlex(),
                                  TermOrder::weight({Rat(17, 2), 5, 3, 1})};
    for (auto& ord : orders) {
        for (int it = 0; it < 200; ++it) {
            auto a = random_monomial(4, 3, rng);
            auto b = random_monomial(4, 3, rng);
            auto c = random_monomial(4, 3, rng);
            auto ab = ord.compare(a, b);
            auto ba = ord.compare(b, a);
            if (ab == Cmp::greater) CHECK(ba == Cmp::less);
            if (ab == Cmp::equal) CHECK(a == b);
            if (ord.greater(a, b) && ord.greater(b, c)) CHECK(ord.greater(a, c));
            CHECK(ord.compare(a * c, b * c) == ab);
        }
    }
}

TEST_CASE("borel-greater implies greater for every term order") {
    std::mt19937_64 rng(7);
    std::vector<TermOrder> orders{TermOrder::lex(), TermOrder::revlex()};
    std::uniform_int_distribution<int> wdist(1, 50);
    for (int k = 0; k < 20; ++k) {
        std::vector<Rat> w(4);
        long base = 0;
        for (int i = 3; i >= 0; --i) {
            base += wdist(rng);
            w[static_cast<size_t>(i)] = base;
        }
        orders.push_back(TermOrder::weight(w));
    }
    int hits = 0;
    for (int it = 0; it < 500; ++it) {
        auto a = random_monomial(4, 4, rng);
        auto b = random_monomial(4, 4, rng);
        if (borel_compare(a, b) != BorelCmp::greater) continue;
        ++hits;
        for (auto& ord : orders) CHECK(ord.compare(a, b) == Cmp::greater);
    }
    CHECK(hits > 10);
}

TEST_CASE("scalar product identity a.w = delta(a).delta_w(w)") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-20, 20);
    for (int it = 0; it < 100; ++it) {
        int n = 5;
        std::vector<long long> a(static_cast<size_t>(n)), w(static_cast<size_t>(n));
        for (auto& x : a) x = std::abs(dist(rng));
        for (auto& x : w) x = dist(rng);
        long long lhs = 0;
        for (int i = 0; i < n; ++i) lhs += a[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
        // Delta(a) . (w1-w2, ..., w_{n-1}-w_n, w_n)
        long long rhs = 0, pref = 0;
        for (int i = 0; i < n; ++i) {
            pref += a[static_cast<size_t>(i)];
            long long dw = (i + 1 < n) ? w[static_cast<size_t>(i)] - w[static_cast<size_t>(i + 1)]
                                       : w[static_cast<size_t>(i)];
            rhs += pref * dw;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("polynomial arithmetic normalizes") {
    auto f = Polynomial({{1, mono({2, 0})}, {1, mono({0, 1})}});
    auto g = Polynomial({{-1, mono({2, 0})}, {2, mono({0, 1})}});
    auto s = f + g;
    CHECK(s.nterms() == 1);
    CHECK(s.terms()[0].coeff == 3);
    CHECK((f - f).is_zero());
    auto p = f * g;
    CHECK(p.homogeneous_degree() == std::nullopt);
    auto h = Polynomial({{1, mono({1, 0})}, {1, mono({0, 1})}});
    CHECK((h * h).homogeneous_degree() == 2);
}

TEST_CASE("apply_coordinates identity and inverse round trip") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 10; ++it) {
        auto f = random_poly(3, 3, 4, rng);
        auto id = identity_coordinates(3);
        CHECK(apply_coordinates(id, f) == f);
        auto g = random_coordinates(3, 100 + static_cast<std::uint64_t>(it), 10);
        auto back = apply_coordinates(g.inverted(), apply_coordinates(g, f));
        CHECK(back == f);
        CHECK(apply_coordinates(g, f).homogeneous_degree() == f.homogeneous_degree());
    }
}

TEST_CASE("lower-triangular action sends a monomial downward in the borel order") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        auto g = random_coordinates(4, 500 + static_cast<std::uint64_t>(it), 10,
                                    ChangeOfCoordinates::Shape::lower_triangular);
        auto m = random_monomial(4, 3, rng);
        auto fm = apply_coordinates(g, Polynomial::from_monomial(m));
        bool found_m = false;
        for (auto& t : fm.terms()) {
            if (t.mono == m) {
                found_m = true;
                continue;
            }
            CHECK(borel_compare(t.mono, m) == BorelCmp::less);
        }
        CHECK(found_m);
    }
}

TEST_CASE("random_coordinates determinism and invertibility") {
    auto a = random_coordinates(3, 1, 10);
    auto b = random_coordinates(3, 1, 10);
    CHECK(a.matrix == b.matrix);
    auto c = random_coordinates(1, 99, 5);
    CHECK(c.matrix[0][0] != 0);
    for (std::uint64_t s = 0; s < 100; ++s)
        CHECK(determinant(random_coordinates(4, s, 10).matrix) != 0);
}

TEST_CASE("exact linear algebra basics") {
    RatMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == 0);
    RatMatrix inv_in{{2, 1}, {1, 1}};
    auto inv = inverse(inv_in);
    CHECK(inv == RatMatrix{{1, -1}, {-1, 2}});
    auto ker = kernel_basis(m, 3);
    CHECK(ker.size() == 1);
    for (auto& row : m) {
        Rat dot = 0;
        for (size_t j = 0; j < 3; ++j) dot += row[j] * ker[0][j];
        CHECK(dot == 0);
    }
    // rank from rref agrees with fraction-free rank on random matrices
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int it = 0; it < 30; ++it) {
        RatMatrix r(5, std::vector<Rat>(7));
        for (auto& row : r)
            for (auto& x : row) x = Rat(d(rng), 1 + std::abs(d(rng)));
        RatMatrix cp = r;
        CHECK(static_cast<int>(rref(cp).size()) == rank(r));
    }
}
