#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ginlex/monomial.hpp"
#include "ginlex/numbers.hpp"
#include "ginlex/term_order.hpp"

namespace ginlex {

struct Term {
    Rat coeff;
    Monomial mono;
};

// Exact multivariate polynomial over the rationals. Terms are kept merged,
// zero-free and sorted descending under the canonical (degree, lex) order.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::vector<Term> terms);  // normalizes
    static Polynomial zero() { return Polynomial(); }
    static Polynomial from_monomial(const Monomial& m, Rat c = 1);

    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    int nvars() const { return terms_.empty() ? 0 : terms_.front().mono.nvars(); }

    // all terms share one degree?
    std::optional<int> homogeneous_degree() const;

    const Term& leading_term(const TermOrder& order) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial times_monomial(const Monomial& m, const Rat& c = 1) const;
    Polynomial monic(const TermOrder& order) const;

    bool operator==(const Polynomial& o) const { return equal(o); }
    bool operator!=(const Polynomial& o) const { return !equal(o); }

    std::string str() const;

  private:
    bool equal(const Polynomial& o) const;
    std::vector<Term> terms_;
};

}  // namespace ginlex
