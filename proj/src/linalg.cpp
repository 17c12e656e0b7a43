#include "g2c/linalg.hpp"

#include <stdexcept>

namespace g2c {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged input");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw std::invalid_argument("Matrix::from_cols: ragged input");
        for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) m.at(i, j) += a * b;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::trace: not square");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r.at(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Scalar inv = r.at(lead, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) = r.at(lead, j) * inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Scalar f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {pivots.size(), std::move(r), std::move(pivots)};
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
        if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: dimension mismatch");
    RrefResult r = rref(Matrix::from_rows(vectors));
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vec v(ambient_dim);
        v[i] = Scalar(1);
        rows.push_back(std::move(v));
    }
    return span(ambient_dim, rows);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    std::vector<Vec> rows = basis_;
    rows.push_back(v);
    return Subspace::span(ambient_, rows).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    return sum(other).dim() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: dimension mismatch");
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return Subspace::span(ambient_, rows);
}

std::size_t Subspace::intersection_dim(const Subspace& other) const {
    return dim() + other.dim() - sum(other).dim();
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[r.pivot_cols[p]] = -r.reduced.at(p, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

Subspace span_closure(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return Subspace(0);
    std::size_t n = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != n) throw std::invalid_argument("span_closure: dimension mismatch");
    return Subspace::span(n, vectors);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t c : r.pivot_cols)
        if (c == a.cols()) return std::nullopt;  // inconsistent
    Vec x(a.cols());
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) x[r.pivot_cols[p]] = r.reduced.at(p, a.cols());
    return x;
}

}  // namespace g2c
