#include "ginlex/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginlex {

namespace {

using IntMatrix = std::vector<std::vector<Int>>;

// clear row denominators; optionally record the scaling factors
IntMatrix to_integer_rows(const RatMatrix& m, std::vector<Rat>* scales = nullptr) {
    IntMatrix out;
    out.reserve(m.size());
    for (auto& row : m) {
        Int l = 1;
        for (auto& x : row) {
            Int d = denominator(x);
            l = lcm(l, d);
        }
        std::vector<Int> r;
        r.reserve(row.size());
        for (auto& x : row) r.push_back(numerator(x) * (l / denominator(x)));
        if (scales) scales->push_back(Rat(1, l));
        out.push_back(std::move(r));
    }
    return out;
}

void reduce_row_by_gcd(std::vector<Int>& row) {
    Int g = 0;
    for (auto& x : row) {
        g = gcd(g, x);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& x : row) x /= g;
}

// Fraction-free elimination; returns rank. Destroys the matrix.
int bareiss_rank(IntMatrix& a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // partial pivoting on numerator magnitude: smallest nonzero pivot
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            if (piv == rows || abs(a[i][c]) < abs(a[piv][c])) piv = i;
        }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            // cross-multiplication step; row gcd reduction keeps entries small
            // and is harmless since row scaling preserves rank
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
            a[i][c] = 0;
            reduce_row_by_gcd(a[i]);
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

int rank(const RatMatrix& m) {
    if (m.empty()) return 0;
    IntMatrix a = to_integer_rows(m);
    return bareiss_rank(a);
}

Rat determinant(const RatMatrix& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (m[0].size() != n) throw std::invalid_argument("determinant of non-square matrix");
    std::vector<Rat> scales;
    IntMatrix a = to_integer_rows(m, &scales);
    // plain Bareiss, no gcd reduction: final pivot is the determinant
    Int prev = 1;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t i = c; i < n; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[c], a[piv]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j)
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    Rat det(a[n - 1][n - 1]);
    for (auto& s : scales) det *= s;
    return sign > 0 ? det : -det;
}

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);  // drop zero rows
    return pivots;
}

RatMatrix kernel_basis(const RatMatrix& m, int ncols) {
    RatMatrix a = m;
    for (auto& row : a)
        if (static_cast<int>(row.size()) != ncols)
            throw std::invalid_argument("kernel_basis column mismatch");
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    RatMatrix basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Rat> v(static_cast<size_t>(ncols), 0);
        v[static_cast<size_t>(c)] = 1;
        for (size_t r = 0; r < pivots.size() && r < a.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -a[r][static_cast<size_t>(c)];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const RatMatrix& m, const std::vector<Rat>& v) {
    int r0 = rank(m);
    RatMatrix ext = m;
    ext.push_back(v);
    return rank(ext) == r0;
}

RatMatrix inverse(const RatMatrix& m) {
    size_t n = m.size();
    RatMatrix aug = m;
    for (size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw std::invalid_argument("inverse of non-square matrix");
        for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
    }
    std::vector<int> pivots = rref(aug);
    if (aug.size() != n || pivots.size() != n || static_cast<size_t>(pivots[n - 1]) != n - 1)
        throw std::invalid_argument("matrix not invertible");
    RatMatrix inv(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace ginlex
