#pragma once

#include <optional>
#include <vector>

#include "g2c/scalar.hpp"

namespace g2c {

using Vec = std::vector<Scalar>;

/// Dense matrix over Q(i). Row-major. Immutable in spirit: operations
/// return fresh matrices.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_cols(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    friend Matrix operator*(const Scalar& s, const Matrix& m) { return m * s; }
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Scalar trace() const;
    bool is_zero() const;

    /// [a, b] = ab - ba for square matrices.
    static Matrix commutator(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

struct RrefResult {
    std::size_t rank;
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form; exact Gauss-Jordan over Q(i).
RrefResult rref(const Matrix& m);

/// Subspace of Q(i)^n held by its unique reduced-echelon row basis, so
/// equality of subspaces is equality of representations.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    std::size_t intersection_dim(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;  // rows of an rref matrix, zero rows dropped
};

/// Null space {v : m v = 0} with canonical basis.
Subspace kernel(const Matrix& m);

/// Canonical span of the given vectors; throws on mixed ambient dimensions.
Subspace span_closure(const std::vector<Vec>& vectors);

/// One solution of A x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace g2c
