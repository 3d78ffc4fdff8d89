#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ginlex/polynomial.hpp"
#include "ginlex/stable.hpp"

namespace ginlex {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int ln, int c, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ", col " + std::to_string(c) + ": " +
                             what),
          line(ln),
          col(c) {}
};

struct ParsedIdeal {
    int n = 0;
    std::vector<std::string> var_names;
    std::vector<Polynomial> gens;
};

// Format: header `vars: x1 x2 ... xn`; then one homogeneous generator per
// line as +/- separated terms; a term is an optional rational coefficient
// (`p/q` or integer) and `*`-separated powers `xk^e` (`^1` may be omitted).
// Blank lines and `#` comments are ignored. Inhomogeneous lines are rejected
// with the offending degrees.
ParsedIdeal parse_ideal(const std::string& text);

std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& var_names);
std::string print_ideal(const std::vector<Polynomial>& gens, int n);

// Macaulay-style diagram: rows indexed by j - i ascending with an explicit
// label, columns i = 1..n.
std::string render_diagram(const BettiTable& bt, int n);

// Line-oriented `key: value` record; field order is emission order.
struct ResultRecord {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(const std::string& key, const std::string& value) { fields.push_back({key, value}); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    std::string str() const;
};

}  // namespace ginlex
