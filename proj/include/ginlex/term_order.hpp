#pragma once

#include <string>
#include <vector>

#include "ginlex/monomial.hpp"
#include "ginlex/numbers.hpp"

namespace ginlex {

// Term orders refining x1 > x2 > ... > xn. All orders compare total degree
// first; within a degree they are lex, revlex, or a weight order with a
// lex/revlex tiebreak. Weight vectors must be strictly decreasing and positive.
class TermOrder {
  public:
    enum class Kind { lex, revlex, weight };

    static TermOrder lex();
    static TermOrder revlex();
    static TermOrder weight(std::vector<Rat> w, Kind tiebreak = Kind::revlex);

    Kind kind() const { return kind_; }
    Kind tiebreak() const { return tiebreak_; }
    const std::vector<Rat>& weights() const { return weights_; }

    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::greater;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::less; }

    std::string str() const;

  private:
    TermOrder(Kind k, std::vector<Rat> w, Kind tb) : kind_(k), tiebreak_(tb), weights_(std::move(w)) {}
    Kind kind_;
    Kind tiebreak_;
    std::vector<Rat> weights_;
};

}  // namespace ginlex
