#pragma once

#include <cstdint>
#include <vector>

#include "ginlex/linalg.hpp"
#include "ginlex/polynomial.hpp"

namespace ginlex {

// Invertible linear change of coordinates acting by x_i |-> sum_j g[j][i] x_j.
struct ChangeOfCoordinates {
    enum class Shape { general, upper_triangular, lower_triangular };

    RatMatrix matrix;  // n x n, column i gives the image of x_i
    Shape shape = Shape::general;

    int nvars() const { return static_cast<int>(matrix.size()); }
    // image of x_i as a linear form
    Polynomial image_of(int i) const;
    ChangeOfCoordinates inverted() const;
};

ChangeOfCoordinates identity_coordinates(int n);

// Substitute, expand and collect exactly; preserves homogeneous degree.
Polynomial apply_coordinates(const ChangeOfCoordinates& g, const Polynomial& f);
std::vector<Polynomial> apply_coordinates(const ChangeOfCoordinates& g,
                                          const std::vector<Polynomial>& fs);

// Deterministic seeded random invertible matrix with entries in [-bound, bound]
// (nonzero diagonal for triangular shapes). Redraws until invertible, capped.
ChangeOfCoordinates random_coordinates(int n, std::uint64_t seed, int bound,
                                       ChangeOfCoordinates::Shape shape =
                                           ChangeOfCoordinates::Shape::general);

}  // namespace ginlex
