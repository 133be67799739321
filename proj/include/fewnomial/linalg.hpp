#pragma once

#include <optional>
#include <vector>

#include "fewnomial/core.hpp"

namespace fewnomial {

/// Dense square matrix, row-major. Small n (the number of variables).
struct Matrix {
    int n = 0;
    std::vector<double> a;

    Matrix() = default;
    explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}

    static Matrix identity(int size);

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    Vec apply(const Vec& v) const;            // A v
    Vec apply_transpose(const Vec& v) const;  // A^T v
    Matrix operator*(const Matrix& rhs) const;
};

struct Inversion {
    Matrix inverse;
    double det = 0.0;
};

/// Gaussian elimination with partial pivoting. Returns nothing when
/// |det| <= 1e-12 * product of row norms.
std::optional<Inversion> invert(const Matrix& m);

double determinant(const Matrix& m);

/// Rank of the row family; a pivot counts as zero when its magnitude is at
/// most rel_tol times the largest entry of the matrix.
int rank_of(std::vector<Vec> rows, double rel_tol = 1e-10);

}  // namespace fewnomial
