#include "fewnomial/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace fewnomial {

Matrix Matrix::identity(int size) {
    Matrix m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1.0;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    Vec out(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Vec Matrix::apply_transpose(const Vec& v) const {
    Vec out(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += (*this)(i, j) * v[i];
        out[j] = s;
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    Matrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double x = (*this)(i, k);
            if (x == 0.0) continue;
            for (int j = 0; j < n; ++j) out(i, j) += x * rhs(k, j);
        }
    return out;
}

namespace {

double row_norm_product(const Matrix& m) {
    double prod = 1.0;
    for (int i = 0; i < m.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.n; ++j) s += m(i, j) * m(i, j);
        prod *= std::sqrt(s);
    }
    return prod;
}

}  // namespace

std::optional<Inversion> invert(const Matrix& m) {
    const int n = m.n;
    Matrix work = m;
    Matrix inv = Matrix::identity(n);
    double det = 1.0;

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(work(r, col)) > std::fabs(work(pivot, col))) pivot = r;
        if (work(pivot, col) == 0.0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work.a[static_cast<std::size_t>(pivot) * n + j],
                          work.a[static_cast<std::size_t>(col) * n + j]);
                std::swap(inv.a[static_cast<std::size_t>(pivot) * n + j],
                          inv.a[static_cast<std::size_t>(col) * n + j]);
            }
            det = -det;
        }
        double p = work(col, col);
        det *= p;
        double ip = 1.0 / p;
        for (int j = 0; j < n; ++j) {
            work(col, j) *= ip;
            inv(col, j) *= ip;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            double factor = work(r, col);
            if (factor == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                work(r, j) -= factor * work(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }

    if (std::fabs(det) <= 1e-12 * row_norm_product(m)) return std::nullopt;
    return Inversion{std::move(inv), det};
}

double determinant(const Matrix& m) {
    const int n = m.n;
    Matrix work = m;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(work(r, col)) > std::fabs(work(pivot, col))) pivot = r;
        if (work(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(work.a[static_cast<std::size_t>(pivot) * n + j],
                          work.a[static_cast<std::size_t>(col) * n + j]);
            det = -det;
        }
        det *= work(col, col);
        for (int r = col + 1; r < n; ++r) {
            double factor = work(r, col) / work(col, col);
            for (int j = col; j < n; ++j) work(r, j) -= factor * work(col, j);
        }
    }
    return det;
}

int rank_of(std::vector<Vec> rows, double rel_tol) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    double maxabs = 0.0;
    for (const Vec& r : rows)
        for (double x : r) maxabs = std::max(maxabs, std::fabs(x));
    if (maxabs == 0.0) return 0;
    const double tol = rel_tol * maxabs;

    int rank = 0;
    for (std::size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        for (std::size_t r = pivot + 1; r < rows.size(); ++r)
            if (std::fabs(rows[r][col]) > std::fabs(rows[pivot][col])) pivot = r;
        if (std::fabs(rows[pivot][col]) <= tol) continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const Vec& prow = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            double factor = rows[r][col] / prow[col];
            if (factor == 0.0) continue;
            for (std::size_t j = col; j < ncols; ++j) rows[r][j] -= factor * prow[j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace fewnomial
