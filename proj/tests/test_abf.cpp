#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ginlex/abf.hpp"
#include "ginlex/corpus.hpp"
#include "ginlex/fourier_motzkin.hpp"
#include "ginlex/groebner.hpp"

using namespace ginlex;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Polynomial poly(std::vector<std::pair<int, std::vector<int>>> terms) {
    std::vector<Term> ts;
    for (auto& [c, e] : terms) ts.push_back({Rat(c), mono(e)});
    return Polynomial(std::move(ts));
}

bool satisfied(const std::vector<StrictInequality>& cs, const std::vector<Rat>& w) {
    for (auto& c : cs) {
        Rat acc = 0;
        for (size_t k = 0; k < w.size(); ++k) acc += c.coeffs[k] * w[k];
        if (acc <= 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("lower neighbors of a Borel-fixed set") {
    auto ln = lower_neighbors({mono({2, 0, 0}), mono({1, 1, 0})}, 3);
    std::set<Monomial, CanonLess> got(ln.begin(), ln.end());
    std::set<Monomial, CanonLess> want{mono({1, 0, 1}), mono({0, 2, 0})};
    CHECK(got == want);
    // non-Borel-fixed input is rejected
    CHECK_THROWS(lower_neighbors({mono({1, 1, 0})}, 3));
    // the whole degree has no outside monomials
    CHECK(lower_neighbors(monomials_of_degree(3, 2), 3).empty());
}

TEST_CASE("fourier-motzkin feasibility with witness") {
    auto base = decreasing_positive_constraints(4);
    auto res = strict_cone_feasible(base, 4);
    REQUIRE(res.feasible);
    CHECK(satisfied(base, res.witness));

    // add w2 > w1: contradiction with w1 > w2
    auto cs = base;
    cs.push_back({{Rat(-1), Rat(1), Rat(0), Rat(0)}});
    auto bad = strict_cone_feasible(cs, 4);
    REQUIRE_FALSE(bad.feasible);
    REQUIRE(bad.certificate.size() == cs.size());
    std::vector<Rat> combo(4, 0);
    bool some_positive = false;
    for (size_t c = 0; c < cs.size(); ++c) {
        CHECK(bad.certificate[c] >= 0);
        if (bad.certificate[c] > 0) some_positive = true;
        for (int k = 0; k < 4; ++k) combo[static_cast<size_t>(k)] +=
            bad.certificate[c] * cs[c].coeffs[static_cast<size_t>(k)];
    }
    CHECK(some_positive);
    for (auto& v : combo) CHECK(v == 0);
}

TEST_CASE("fourier-motzkin on random cones is sound") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + trial % 2;
        auto cs = decreasing_positive_constraints(n);
        for (int extra = 0; extra < 3; ++extra) {
            std::vector<Rat> row(static_cast<size_t>(n));
            for (auto& v : row) v = coeff(rng);
            cs.push_back({row});
        }
        auto res = strict_cone_feasible(cs, n);
        if (res.feasible) {
            CHECK(satisfied(cs, res.witness));
        } else {
            std::vector<Rat> combo(static_cast<size_t>(n), 0);
            for (size_t c = 0; c < cs.size(); ++c) {
                REQUIRE(res.certificate[c] >= 0);
                for (int k = 0; k < n; ++k) combo[static_cast<size_t>(k)] +=
                    res.certificate[c] * cs[c].coeffs[static_cast<size_t>(k)];
            }
            for (auto& v : combo) CHECK(v == 0);
        }
    }
}

TEST_CASE("single-degree space with one lower polynomial has two gins") {
    auto abf = abf_space(3, {mono({2, 0, 0}), mono({1, 1, 0})},
                         {poly({{1, {1, 0, 1}}, {1, {0, 2, 0}}})});
    auto fam = enumerate_gins(abf);
    REQUIRE(fam.members.size() == 2);
    MonomialIdeal grev(3, {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0})});
    MonomialIdeal glex(3, {mono({2, 0, 0}), mono({1, 1, 0}), mono({1, 0, 1})});
    bool has_rev = false, has_lex = false;
    for (auto& m : fam.members) {
        if (m.ideal == grev) has_rev = m.is_revlex;
        if (m.ideal == glex) has_lex = m.is_lex;
        // witness weights realize the selection degreewise
        auto direct = initial_ideal(abf.ideal_gens, TermOrder::weight(m.witness));
        CHECK(direct.degree_slice(2) == m.ideal.degree_slice(2));
    }
    CHECK(has_rev);
    CHECK(has_lex);
}

TEST_CASE("space validation rejects support outside the lower neighbors") {
    CHECK_THROWS_AS(abf_space(3, {mono({2, 0, 0})}, {poly({{1, {1, 0, 1}}, {1, {0, 2, 0}}})}),
                    NotAlmostBorelFixedError);
}

TEST_CASE("two-degree construction and recognition round-trip") {
    auto abf = construct_abf(4, {{mono({1, 0, 2, 0}), mono({0, 2, 0, 1})}});
    REQUIRE(abf.degrees.size() == 2);
    CHECK(abf.degrees[0].d == 3);
    CHECK(abf.degrees[0].lower_polys.size() == 1);
    // strict closure of two incomparable monomials of degree 3
    for (auto& a : abf.degrees[0].borel_part) {
        bool above = borel_compare(a, mono({1, 0, 2, 0})) == BorelCmp::greater ||
                     borel_compare(a, mono({0, 2, 0, 1})) == BorelCmp::greater;
        CHECK(above);
    }
    auto rec = recognize_abf(abf.ideal_gens, 4, abf.top_degree());
    REQUIRE(rec.degrees.size() == abf.degrees.size());
    for (size_t k = 0; k < rec.degrees.size(); ++k) {
        CHECK(rec.degrees[k].d == abf.degrees[k].d);
        CHECK(rec.degrees[k].lower_polys.size() == abf.degrees[k].lower_polys.size());
    }
}

TEST_CASE("construction input validation") {
    // Borel-comparable monomials are rejected
    CHECK_THROWS(construct_abf(3, {{mono({2, 0, 0}), mono({1, 1, 0})}}));
    // repeated monomial across blocks is rejected
    CHECK_THROWS(construct_abf(4, {{mono({1, 0, 2, 0})}, {mono({1, 0, 2, 0})}}));
    // mixed degrees are rejected
    CHECK_THROWS(construct_abf(3, {{mono({1, 0, 1}), mono({0, 3, 0})}}));
}

TEST_CASE("recognition rejects a plainly generic polynomial") {
    CHECK_THROWS_AS(recognize_abf({poly({{1, {0, 2, 0}}, {1, {1, 0, 1}}, {1, {2, 0, 0}}})}, 3, 2),
                    NotAlmostBorelFixedError);
}

TEST_CASE("betti poset on the three-gin family") {
    auto abf = construct_abf(
        7, {{mono({1, 0, 1, 0, 0, 2, 0}), mono({0, 2, 1, 0, 0, 0, 1})},
            {mono({1, 0, 0, 2, 0, 1, 0}), mono({0, 2, 0, 2, 0, 0, 0})}});
    auto fam = enumerate_gins(abf);
    REQUIRE(fam.members.size() == 3);
    auto rep = betti_poset(fam);
    REQUIRE(rep.minimum.has_value());
    CHECK(fam.members[static_cast<size_t>(*rep.minimum)].is_revlex);
    CHECK_FALSE(rep.maximum.has_value());
    CHECK(rep.maximal.size() == 2);
    // one forbidden tuple comes with a certificate
    REQUIRE(fam.infeasible.size() == 1);
    CHECK_FALSE(fam.infeasible[0].certificate.empty());
}

TEST_CASE("enumerated members agree with the randomized oracle") {
    for (auto& abf : random_abf_ideals(4, 4, 3, 61)) {
        auto fam = enumerate_gins(abf);
        REQUIRE_FALSE(fam.members.empty());
        for (auto& m : fam.members) {
            CHECK(is_strongly_stable(m.ideal));
            auto cross = gin(abf.ideal_gens, TermOrder::weight(m.witness), {3, 100, 11});
            CHECK(cross == m.ideal);
        }
    }
}
