#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ginlex/io.hpp"
#include "ginlex/stable.hpp"

using namespace ginlex;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("parsing the documented format") {
    auto in = parse_ideal(
        "# a comment\n"
        "vars: x1 x2 x3\n"
        "\n"
        "x1^2 - 7*x2*x3\n"
        "1/2*x1*x2^2 + x3^3  # trailing comment\n");
    CHECK(in.n == 3);
    REQUIRE(in.gens.size() == 2);
    CHECK(in.gens[0] == Polynomial({{Rat(1), mono({2, 0, 0})}, {Rat(-7), mono({0, 1, 1})}}));
    CHECK(in.gens[1] == Polynomial({{Rat(1, 2), mono({1, 2, 0})}, {Rat(1), mono({0, 0, 3})}}));
}

TEST_CASE("parsing accepts arbitrary variable names and implicit powers") {
    auto in = parse_ideal("vars: a b\na*b + b^2\n");
    CHECK(in.var_names == std::vector<std::string>{"a", "b"});
    CHECK(in.gens[0] == Polynomial({{Rat(1), mono({1, 1})}, {Rat(1), mono({0, 2})}}));
}

TEST_CASE("parse errors carry line and column") {
    CHECK_THROWS_AS(parse_ideal("x1^2\n"), ParseError);
    try {
        parse_ideal("vars: x1 x2\nx1*y\n");
        FAIL("unknown variable accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 4);
    }
    try {
        parse_ideal("vars: x1 x2\nx1^2 + x2\n");
        FAIL("inhomogeneous generator accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("2, 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_ideal("vars: x1\n1/0*x1\n"), ParseError);
}

TEST_CASE("printing and parsing round-trip") {
    std::vector<Polynomial> gens = {
        Polynomial({{Rat(1), mono({2, 0, 0})}, {Rat(-3, 2), mono({0, 1, 1})}}),
        Polynomial({{Rat(-1), mono({1, 1, 1})}})};
    auto text = print_ideal(gens, 3);
    auto back = parse_ideal(text);
    CHECK(back.n == 3);
    REQUIRE(back.gens.size() == gens.size());
    for (size_t k = 0; k < gens.size(); ++k) CHECK(back.gens[k] == gens[k]);
    CHECK(print_polynomial(Polynomial::zero(), {"x1"}) == "0");
}

TEST_CASE("diagram rendering") {
    BettiTable bt;
    bt.set(0, 0, 1);
    bt.set(1, 2, 3);
    bt.set(2, 3, 2);
    bt.set(1, 3, 1);
    bt.set(2, 4, 3);
    bt.set(3, 5, 1);
    CHECK(render_diagram(bt, 3) ==
          "row j-i=1: 3 2 0\n"
          "row j-i=2: 1 3 1\n");
    CHECK(render_diagram(BettiTable{}, 3).empty());
}

TEST_CASE("result records preserve field order") {
    ResultRecord rec;
    rec.add("command", "betti");
    rec.add("entries", 4);
    CHECK(rec.str() == "command: betti\nentries: 4\n");
}
