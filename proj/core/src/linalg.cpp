#include "dkpent/linalg.hpp"

#include <stdexcept>

namespace dkpent::linalg {

void Matrix::push_row(Vec v) {
    if (cols_ == 0 && data_.empty()) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.push_back(std::move(v));
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        std::swap(m.row(r), m.row(sel));
        const Scalar inv = Scalar(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    // Drop zero rows.
    Matrix out(0, m.cols());
    for (std::size_t i = 0; i < r; ++i) out.push_row(std::move(m.row(i)));
    m = std::move(out);
    return pivots;
}

Matrix kernel(const Matrix& m) {
    Matrix e = m;
    std::vector<std::size_t> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix out(0, m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols(), Scalar(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e.at(i, c);
        out.push_row(std::move(v));
    }
    return out;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Subspace::Subspace(std::size_t ambient_dim, Matrix spanning_rows)
    : ambient_(ambient_dim), basis_(std::move(spanning_rows)) {
    if (basis_.rows() == 0) basis_ = Matrix(0, ambient_dim);
    if (basis_.cols() != ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
    pivots_ = rref(basis_);
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Scalar f = v[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_.at(i, j);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = reduce(v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    Matrix all(0, ambient_);
    for (std::size_t i = 0; i < basis_.rows(); ++i) all.push_row(basis_.row(i));
    for (std::size_t i = 0; i < other.basis_.rows(); ++i) all.push_row(other.basis_.row(i));
    return Subspace(ambient_, std::move(all));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    // Solve u^T A = v^T B: kernel of [A^T | -B^T] read columnwise.
    const std::size_t ra = basis_.rows(), rb = other.basis_.rows();
    Matrix sys(ambient_, ra + rb);
    for (std::size_t j = 0; j < ambient_; ++j) {
        for (std::size_t i = 0; i < ra; ++i) sys.at(j, i) = basis_.at(i, j);
        for (std::size_t i = 0; i < rb; ++i) sys.at(j, ra + i) = -other.basis_.at(i, j);
    }
    Matrix null = kernel(sys);
    Matrix rows(0, ambient_);
    for (std::size_t k = 0; k < null.rows(); ++k) {
        Vec v(ambient_, Scalar(0));
        for (std::size_t i = 0; i < ra; ++i)
            if (null.at(k, i) != 0)
                for (std::size_t j = 0; j < ambient_; ++j) v[j] += null.at(k, i) * basis_.at(i, j);
        rows.push_row(std::move(v));
    }
    return Subspace(ambient_, std::move(rows));
}

} // namespace dkpent::linalg
