#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ginlex/corpus.hpp"
#include "ginlex/koszul.hpp"
#include "ginlex/stable.hpp"

using namespace ginlex;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Polynomial poly(std::vector<std::pair<int, std::vector<int>>> terms) {
    std::vector<Term> ts;
    for (auto& [c, e] : terms) ts.push_back({Rat(c), mono(e)});
    return Polynomial(std::move(ts));
}

}  // namespace

TEST_CASE("linear form sequences validate their input") {
    auto v = LinearFormSequence::last_variables(4, 2);
    REQUIRE(v.size() == 2);
    CHECK(v.forms[0] == poly({{1, {0, 0, 1, 0}}}));
    CHECK(v.forms[1] == poly({{1, {0, 0, 0, 1}}}));
    CHECK(LinearFormSequence::all_variables(3).size() == 3);
    CHECK(LinearFormSequence::generic(3, 2, 5).size() == 2);
    // dependent or non-linear forms are rejected
    CHECK_THROWS(LinearFormSequence::explicit_forms(
        {poly({{1, {1, 0, 0}}}), poly({{2, {1, 0, 0}}})}));
    CHECK_THROWS(LinearFormSequence::explicit_forms({poly({{1, {2, 0, 0}}})}));
}

TEST_CASE("quotient ring bases and dimensions") {
    auto gens = std::vector<Polynomial>{poly({{1, {2, 0}}}), poly({{1, {0, 2}}})};
    QuotientRing qr(gens, 2, 5);
    CHECK(qr.quotient_dim(0) == 1);
    CHECK(qr.quotient_dim(1) == 2);
    CHECK(qr.quotient_dim(2) == 1);  // only x1*x2 survives
    CHECK(qr.quotient_dim(3) == 0);
}

TEST_CASE("full-variable koszul homology of the whole ring vanishes") {
    auto bt = graded_betti({}, 3);
    CHECK(bt.get(0, 0) == 1);
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j <= 8; ++j) CHECK(bt.get(i, j) == 0);
}

TEST_CASE("koszul resolution of the residue field") {
    std::vector<Polynomial> maximal;
    for (int k = 1; k <= 4; ++k)
        maximal.push_back(Polynomial::from_monomial(Monomial::variable(4, k)));
    auto bt = graded_betti(maximal, 4);
    for (int i = 0; i <= 4; ++i) {
        CHECK(bt.get(i, i) == static_cast<long long>(binomial(4, i)));
        for (int j = 0; j <= 8; ++j)
            if (j != i) CHECK(bt.get(i, j) == 0);
    }
}

TEST_CASE("complete intersection of two squares") {
    auto gens = std::vector<Polynomial>{poly({{1, {2, 0}}}), poly({{1, {0, 2}}})};
    auto bt = graded_betti(gens, 2);
    CHECK(bt.get(1, 2) == 2);
    CHECK(bt.get(2, 4) == 1);
    CHECK(bt.get(2, 3) == 0);
    CHECK(bt.total(1) == 2);
    CHECK(bt.total(2) == 1);
}

TEST_CASE("homology dimensions match the generator-statistics formula") {
    for (auto& I : random_strongly_stable_ideals(6, 3, 3, 71)) {
        auto gens = to_polynomials(I);
        CHECK(graded_betti(gens, 3) == ek_betti(I));
        int jb = I.max_gen_degree() + 4;
        for (int p = 0; p <= 3; ++p) {
            auto forms = LinearFormSequence::last_variables(3, p);
            auto ah = ah_koszul_betti(I, p, jb);
            for (int i = 0; i <= p; ++i)
                for (int j = 0; j <= jb - 1; ++j) {
                    long long direct = koszul_betti(gens, 3, forms, i, j);
                    auto it = ah.find({i, j});
                    CHECK(direct == (it == ah.end() ? 0 : it->second));
                }
        }
    }
}

TEST_CASE("tensor with generic forms matches the last-variables computation") {
    MonomialIdeal I(3, {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0})});
    auto t = koszul_betti_tensor(to_polynomials(I), 3, 3, 13, 7);
    auto ah = ah_koszul_tensor(I, 3, 7);
    CHECK(t == ah);
    CHECK(recursion_check(t));
}

TEST_CASE("splitting recursions hold for strongly stable ideals") {
    for (auto& I : random_strongly_stable_ideals(5, 3, 3, 19)) {
        auto t = koszul_betti_tensor(to_polynomials(I), 3, 3, 7, I.max_gen_degree() + 4);
        CHECK(recursion_check(t));
    }
}

TEST_CASE("proper sequences") {
    // strongly stable ideals admit proper generic sequences
    MonomialIdeal I(3, {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0})});
    auto forms = LinearFormSequence::generic(3, 3, 3);
    CHECK(is_proper_sequence(forms, to_polynomials(I), 3, 8));

    // a complete intersection in unequal degrees is not componentwise linear
    // and generic forms fail to be proper
    auto ci = std::vector<Polynomial>{poly({{1, {2, 0, 0}}}), poly({{1, {0, 3, 0}}})};
    CHECK_FALSE(is_proper_sequence(LinearFormSequence::generic(3, 3, 3), ci, 3, 9));
}
