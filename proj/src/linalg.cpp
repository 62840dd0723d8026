#include "n2alg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace n2alg {

Matrix zero_matrix(size_t rows, size_t cols) {
    return Matrix(rows, Vec(cols, Rational(0)));
}

Matrix identity_matrix(size_t n) {
    Matrix m = zero_matrix(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Vec matvec(const Matrix& m, const Vec& v) {
    Vec out(m.size(), Rational(0));
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c)
            if (m[r][c] != 0 && v[c] != 0) out[r] += m[r][c] * v[c];
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty()) return {};
    Matrix out = zero_matrix(a.size(), b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            if (a[i][k] != 0)
                for (size_t j = 0; j < b[0].size(); ++j)
                    if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
    return out;
}

size_t rref(Matrix& m) {
    if (m.empty()) return 0;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Rational inv = m[row][col];
        for (auto& x : m[row]) x /= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[row][c2];
        }
        ++row;
    }
    m.resize(row);
    return row;
}

std::vector<Vec> nullspace(const Matrix& m_in, size_t cols) {
    Matrix m = m_in;
    rref(m);
    std::vector<long> pivot_of_col(cols, -1);
    size_t row = 0;
    for (const auto& r : m) {
        size_t col = 0;
        while (col < cols && r[col] == 0) ++col;
        if (col < cols) pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] != -1) continue;
        Vec v(cols, Rational(0));
        v[free_col] = 1;
        for (size_t col = 0; col < cols; ++col) {
            if (pivot_of_col[col] == -1) continue;
            v[col] = -m[static_cast<size_t>(pivot_of_col[col])][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RowSpace::insert(Vec v) {
    if (v.size() != dim_) throw std::invalid_argument("RowSpace: dimension mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (v[pivots_[r]] != 0) {
            Rational f = v[pivots_[r]];
            for (size_t c = 0; c < dim_; ++c) v[c] -= f * rows_[r][c];
        }
    }
    size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    Rational inv = v[p];
    for (auto& x : v) x /= inv;
    // back-reduce existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][p] != 0) {
            Rational f = rows_[r][p];
            for (size_t c = 0; c < dim_; ++c) rows_[r][c] -= f * v[c];
        }
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
}

bool RowSpace::contains(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (v[pivots_[r]] != 0) {
            Rational f = v[pivots_[r]];
            for (size_t c = 0; c < dim_; ++c) v[c] -= f * rows_[r][c];
        }
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_invertible(const Matrix& m) {
    if (m.empty()) return true;
    if (m.size() != m[0].size()) return false;
    Matrix c = m;
    return rref(c) == m.size();
}

}  // namespace n2alg
