#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "g2c/linalg.hpp"
#include "g2c/scalar.hpp"

namespace g2c {

/// Thrown when a bracket table fails the Jacobi identity; carries the
/// offending basis triple.
struct JacobiError : std::runtime_error {
    std::array<int, 3> triple;
    explicit JacobiError(std::array<int, 3> t)
        : std::runtime_error("Jacobi identity fails on basis triple (" + std::to_string(t[0]) + "," +
                             std::to_string(t[1]) + "," + std::to_string(t[2]) + ")"),
          triple(t) {}
};

/// Finite-dimensional Lie algebra given by structure constants, with a
/// Z_2^3 grading label (0..7, 0 = identity element) on every basis
/// vector. Immutable after construction; bracket rows are stored
/// sparsely.
class GradedLieAlgebra {
public:
    using SparseVec = std::vector<std::pair<int, Scalar>>;

    GradedLieAlgebra() = default;  // the zero algebra

    /// brackets(i, j) must return [b_i, b_j] as a dense coordinate vector;
    /// only i < j is queried, the rest follows by antisymmetry.
    GradedLieAlgebra(std::vector<std::string> names, std::vector<int> grades,
                     const std::function<Vec(int, int)>& brackets);

    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    int grade(int i) const { return grades_[i]; }
    const std::vector<int>& grades() const { return grades_; }

    const SparseVec& bracket(int i, int j) const { return br_[i * dim() + j]; }
    Vec bracket(const Vec& x, const Vec& y) const;
    Vec bracket_basis(int i, int j) const;  // dense copy

    Matrix ad(int i) const;
    Matrix ad(const Vec& x) const;

    /// Basis indices belonging to one grading component.
    std::vector<int> component(int grade) const;
    Subspace component_subspace(int grade) const;

    /// nullopt when the Jacobi identity holds on all basis triples.
    std::optional<std::array<int, 3>> jacobi_witness() const;
    void require_jacobi() const;  // throws JacobiError

    /// c^k_{ij} != 0 implies grade(k) = grade(i) + grade(j) in Z_2^3.
    bool grading_compatible() const;

    /// Scale the bracket componentwise: new [b_i, b_j] = f(i, j) * old.
    GradedLieAlgebra scaled(const std::function<Scalar(int, int)>& factor) const;

    bool same_table(const GradedLieAlgebra& o) const;

private:
    std::vector<std::string> names_;
    std::vector<int> grades_;
    std::vector<SparseVec> br_;  // dim*dim rows
};

/// Checks phi([x,y]_src) = [phi(x), phi(y)]_dst on all basis pairs.
bool is_bracket_preserving(const Matrix& phi, const GradedLieAlgebra& src, const GradedLieAlgebra& dst);

/// If phi maps every grading component of src onto a single component of
/// dst, returns the induced permutation of grades (index -> index).
std::optional<std::array<int, 8>> component_permutation(const Matrix& phi, const GradedLieAlgebra& src,
                                                        const GradedLieAlgebra& dst);

}  // namespace g2c
