#pragma once

#include <array>
#include <utility>

#include "g2c/algebra.hpp"
#include "g2c/octonion.hpp"

namespace g2c {

/// Basis {E, F} of the homogeneous component lambda_i, built from a line
/// through i and a point k off it: E kills the quaternion subalgebra of
/// the line and acts as q e_k -> (e_i q) e_k / 2 on its complement; F is
/// D(e_j, e_i e_j) / 4 for either other point j of the line.
struct ComponentBasis {
    int i;
    std::array<int, 3> line;
    int k;
    Matrix E, F;
};

/// Validates (i in line, k off line, line actually a line), builds E and
/// F, and asserts homogeneity, independence, [E,F] = 0 and the agreement
/// of the two j-choices for F.
ComponentBasis component_basis(int i, const std::array<int, 3>& line, int k);

/// g2 = Der(O) with its fine Z_2^3 grading; built once and shared.
///
/// Canonical basis: for each i in 1..7 take the lexicographically first
/// line through i and the smallest k off it, and set x_i = E, y_i = F;
/// basis order (x1, y1, ..., x7, y7). All structure constants are
/// computed from 8x8 commutators, never transcribed.
class G2System {
public:
    static const G2System& instance();

    const GradedLieAlgebra& algebra() const { return algebra_; }
    const ComponentBasis& component(int i) const;      // i in 1..7
    const Matrix& basis_matrix(int t) const;           // t in 0..13, an 8x8 derivation

    static int x_index(int i) { return 2 * (i - 1); }
    static int y_index(int i) { return 2 * (i - 1) + 1; }

    /// Coordinates of an 8x8 derivation in the canonical basis; throws
    /// if the matrix lies outside Der(O).
    Vec coords(const Matrix& derivation) const;

    Matrix matrix_of(const Vec& coords) const;

private:
    G2System();

    GradedLieAlgebra algebra_;
    std::array<ComponentBasis, 8> comps_;  // index 1..7
    std::vector<Matrix> basis_;
    // cached projector: coordinates = solve on 14 pinned rows of vec(d)
    std::vector<std::size_t> probe_rows_;
    Matrix probe_inverse_;  // 14x14
};

/// Convenience alias for the shared instance.
const G2System& build_g2();

/// Exact structure constants for a bracket-closed list of derivations;
/// throws if some commutator leaves the span.
GradedLieAlgebra structure_constants(const std::vector<Matrix>& basis, const std::vector<int>& grades,
                                     const std::vector<std::string>& names = {});

/// Degree of a homogeneous derivation matrix (d(O_h) subset O_{g+h});
/// nullopt if d is not homogeneous or zero.
std::optional<int> derivation_degree(const Matrix& d);

/// Eigenvalues of ad(z)^2 restricted to the grading component of L with
/// the given grade; requires the restriction to be 2x2 with rational
/// characteristic roots in Q(i).
std::pair<Scalar, Scalar> ad_square_spectrum(const GradedLieAlgebra& L, const Vec& z, int grade_j);

/// Spectrum of ad^2(a E_i + b F_i) on component j of the same line, for
/// the canonical component basis of i. Throws if j is not on that line.
std::pair<Scalar, Scalar> ad_square_spectrum(const G2System& sys, int i, const Scalar& a, const Scalar& b,
                                             int j);

/// Exact eigenvalues of a 2x2 matrix; throws if they are not in Q(i).
std::pair<Scalar, Scalar> eigenvalues_2x2(const Matrix& m);

}  // namespace g2c
