#include "ginlex/coordinates.hpp"

#include <random>
#include <stdexcept>

namespace ginlex {

Polynomial ChangeOfCoordinates::image_of(int i) const {
    int n = nvars();
    std::vector<Term> ts;
    for (int j = 1; j <= n; ++j) {
        const Rat& c = matrix[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)];
        if (c != 0) ts.push_back({c, Monomial::variable(n, j)});
    }
    return Polynomial(std::move(ts));
}

ChangeOfCoordinates ChangeOfCoordinates::inverted() const {
    ChangeOfCoordinates g;
    g.matrix = inverse(matrix);
    g.shape = shape == Shape::general ? Shape::general : shape;
    return g;
}

ChangeOfCoordinates identity_coordinates(int n) {
    ChangeOfCoordinates g;
    g.matrix.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) g.matrix[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    g.shape = ChangeOfCoordinates::Shape::upper_triangular;
    return g;
}

Polynomial apply_coordinates(const ChangeOfCoordinates& g, const Polynomial& f) {
    if (f.is_zero()) return f;
    int n = g.nvars();
    if (f.nvars() != n) throw std::invalid_argument("coordinate change dimension mismatch");
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) images.push_back(g.image_of(i));
    Polynomial out;
    for (auto& t : f.terms()) {
        Polynomial part = Polynomial::from_monomial(Monomial::one(n), t.coeff);
        for (int i = 1; i <= n; ++i)
            for (int e = 0; e < t.mono.exp(i); ++e) part = part * images[static_cast<size_t>(i - 1)];
        out = out + part;
    }
    return out;
}

std::vector<Polynomial> apply_coordinates(const ChangeOfCoordinates& g,
                                          const std::vector<Polynomial>& fs) {
    std::vector<Polynomial> out;
    out.reserve(fs.size());
    for (auto& f : fs) out.push_back(apply_coordinates(g, f));
    return out;
}

ChangeOfCoordinates random_coordinates(int n, std::uint64_t seed, int bound,
                                       ChangeOfCoordinates::Shape shape) {
    if (bound < 2) throw std::invalid_argument("bound must be at least 2");
    using Shape = ChangeOfCoordinates::Shape;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (int attempt = 0; attempt < 100; ++attempt) {
        ChangeOfCoordinates g;
        g.shape = shape;
        g.matrix.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                bool off = (shape == Shape::upper_triangular && i > j) ||
                           (shape == Shape::lower_triangular && i < j);
                if (off) continue;
                int v = dist(rng);
                if (shape != Shape::general && i == j) {
                    while (v == 0) v = dist(rng);
                }
                g.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            }
        }
        if (determinant(g.matrix) != 0) return g;
    }
    throw std::runtime_error("random_coordinates: no invertible draw within cap");
}

}  // namespace ginlex
