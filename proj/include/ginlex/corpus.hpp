#pragma once

#include <cstdint>
#include <vector>

#include "ginlex/abf.hpp"
#include "ginlex/monomial_ideal.hpp"
#include "ginlex/polynomial.hpp"

namespace ginlex {

// Seeded generators of small test ideals; identical seeds give identical
// corpora.

// Ideals generated by Borel closures of random monomials (always strongly
// stable, nonzero).
std::vector<MonomialIdeal> random_strongly_stable_ideals(int count, int n, int maxdeg,
                                                         std::uint64_t seed);

// Random homogeneous generator lists (small coefficients, possibly sharing
// degrees).
std::vector<std::vector<Polynomial>> random_homogeneous_ideals(int count, int n, int maxdeg,
                                                               std::uint64_t seed);

// Random almost Borel-fixed ideals built from random pairwise
// Borel-incomparable monomial blocks.
std::vector<AlmostBorelFixedIdeal> random_abf_ideals(int count, int n, int degree,
                                                     std::uint64_t seed);

}  // namespace ginlex
