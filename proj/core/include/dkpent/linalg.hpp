#pragma once

#include "dkpent/scalar.hpp"

#include <cstddef>
#include <vector>

namespace dkpent::linalg {

using Vec = std::vector<Scalar>;

// Dense exact-rational matrix, row major.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, Vec(cols, Scalar(0))) {}

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    Vec& row(std::size_t i) { return data_[i]; }
    const Vec& row(std::size_t i) const { return data_[i]; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i][j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i][j]; }
    void push_row(Vec v);

    bool operator==(const Matrix& o) const { return cols_ == o.cols_ && data_ == o.data_; }

  private:
    std::size_t cols_ = 0;
    std::vector<Vec> data_;
};

// In-place reduced row echelon form with unit pivots and zero rows dropped;
// pivot columns are returned in order.  Deterministic: first nonzero column,
// first usable row.
std::vector<std::size_t> rref(Matrix& m);

// Basis of {x : m x = 0}, one canonical vector per free column.
Matrix kernel(const Matrix& m);

std::size_t rank(Matrix m);

// Row space of a matrix, held in canonical rref form.  Two subspaces are
// equal iff their rref matrices are identical.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
    Subspace(std::size_t ambient_dim, Matrix spanning_rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    // Canonical representative of v modulo the subspace (zero iff member).
    Vec reduce(Vec v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

  private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace dkpent::linalg
