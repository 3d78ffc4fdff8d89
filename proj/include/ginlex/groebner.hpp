#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ginlex/monomial_ideal.hpp"
#include "ginlex/polynomial.hpp"
#include "ginlex/term_order.hpp"

namespace ginlex {

struct GroebnerBasis {
    std::vector<Polynomial> generators;  // monic
    TermOrder order;
    bool reduced = false;
};

// Common base for every "random choices were not generic enough" condition.
struct GenericityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the independent random coordinate changes of gin() disagree.
struct GenericityError : GenericityFailure {
    std::vector<MonomialIdeal> candidates;
    explicit GenericityError(std::vector<MonomialIdeal> cands)
        : GenericityFailure("genericity not reached: trial initial ideals disagree"),
          candidates(std::move(cands)) {}
};

// Division with full tail reduction: always reduces the largest reducible term
// by the first applicable divisor in listed order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& order);

// Buchberger with the coprime and chain criteria, normal pair selection,
// followed by inter-reduction to the unique reduced basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order);

MonomialIdeal initial_ideal(const GroebnerBasis& gb);
MonomialIdeal initial_ideal(const std::vector<Polynomial>& gens, const TermOrder& order);

struct GinOptions {
    int trials = 3;
    int bound = 100;
    std::uint64_t seed = 1;
    bool upper_triangular = false;  // optimization flag, off by default
};

// Initial ideal after a random change of coordinates, certified by agreement
// of independent trials; the result is checked to be strongly stable.
MonomialIdeal gin(const std::vector<Polynomial>& gens, const TermOrder& order,
                  const GinOptions& opts = {});

std::vector<Polynomial> to_polynomials(const MonomialIdeal& I);

}  // namespace ginlex
