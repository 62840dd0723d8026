#pragma once

#include "n2alg/rational.hpp"

#include <vector>

namespace n2alg {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;  // row-major

Matrix zero_matrix(size_t rows, size_t cols);
Matrix identity_matrix(size_t n);
Vec matvec(const Matrix& m, const Vec& v);
Matrix matmul(const Matrix& a, const Matrix& b);

// In-place reduced row echelon form; returns the rank. Zero rows are dropped.
size_t rref(Matrix& m);

// Basis of the right nullspace of m (cols = number of unknowns).
std::vector<Vec> nullspace(const Matrix& m, size_t cols);

// Incrementally maintained RREF row space; used for closures.
class RowSpace {
public:
    explicit RowSpace(size_t dim) : dim_(dim) {}
    // Returns true if v enlarged the space.
    bool insert(Vec v);
    bool contains(Vec v) const;
    size_t rank() const { return rows_.size(); }
    size_t dim() const { return dim_; }
    const std::vector<Vec>& rows() const { return rows_; }
    bool operator==(const RowSpace& o) const { return rows_ == o.rows_; }

private:
    size_t dim_;
    std::vector<Vec> rows_;       // RREF rows
    std::vector<size_t> pivots_;  // pivot column per row, increasing
};

bool is_invertible(const Matrix& m);

}  // namespace n2alg
