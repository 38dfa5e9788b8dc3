#pragma once

#include "sullivan/rational.hpp"

#include <cstddef>
#include <vector>

namespace sullivan {

using QVector = std::vector<Rational>;

// Dense rational matrix, row-major.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    Rational& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const Rational& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static QMatrix identity(int n);
    static QMatrix from_columns(const std::vector<QVector>& cols_in, int rows);
    QVector apply(const QVector& x) const;  // matrix * column vector
};

// Result of row reduction with the fixed pivot rule: leftmost nonzero
// column, topmost remaining row, no pivoting heuristics. Deterministic.
struct Rref {
    QMatrix m;                    // reduced row echelon form
    std::vector<int> pivot_cols;  // ascending
    int rank = 0;
};

Rref rref(QMatrix m);

int rank(const QMatrix& m);

// Basis of the null space {x : m x = 0}. Vectors are normalized so the
// first nonzero coordinate is 1; count = cols - rank. The zero matrix
// yields the standard basis.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Vectors extending a basis of the column space of m to a basis of
// Q^ambient_dim. Greedy over standard basis vectors in index order, so the
// result is a subset of the standard basis; count = ambient_dim - rank.
std::vector<QVector> image_complement(const QMatrix& m, int ambient_dim);

// Basis of the column space, as the pivot columns of m (original columns).
std::vector<QVector> column_space_basis(const QMatrix& m);

}  // namespace sullivan
