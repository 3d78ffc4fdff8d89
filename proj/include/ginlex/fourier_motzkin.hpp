#pragma once

#include <vector>

#include "ginlex/numbers.hpp"

namespace ginlex {

// Homogeneous strict inequality coeffs . w > 0.
struct StrictInequality {
    std::vector<Rat> coeffs;
};

struct ConeResult {
    bool feasible = false;
    // feasible: a rational point satisfying every constraint strictly
    std::vector<Rat> witness;
    // infeasible: nonnegative multipliers over the input constraints whose
    // combination is the contradictory inequality 0 > 0
    std::vector<Rat> certificate;
};

// Fourier-Motzkin elimination for an open homogeneous cone, eliminating the
// last coordinate first. Derived constraints are deduplicated up to positive
// scaling; multipliers are tracked so infeasibility comes with a certificate.
ConeResult strict_cone_feasible(const std::vector<StrictInequality>& constraints, int n);

// The base cone w_1 > w_2 > ... > w_n > 0.
std::vector<StrictInequality> decreasing_positive_constraints(int n);

}  // namespace ginlex
