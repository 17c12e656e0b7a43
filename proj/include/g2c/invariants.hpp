#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2c/algebra.hpp"

namespace g2c {

/// z(L) = {x : [x, L] = 0}, as the kernel of the stacked adjoint maps.
Subspace center(const GradedLieAlgebra& L);

/// Derived subalgebra [A, B] for subspaces of L.
Subspace bracket_space(const GradedLieAlgebra& L, const Subspace& a, const Subspace& b);

/// L' = L^(1), L^(n) = [L^(n-1), L^(n-1)], including the stabilized tail.
std::vector<Subspace> derived_series(const GradedLieAlgebra& L);

/// L^1 = L', L^n = [L, L^(n-1)].
std::vector<Subspace> lower_central_series(const GradedLieAlgebra& L);

/// K(x, y) = trace(ad x . ad y) on the basis, exact.
Matrix killing_form(const GradedLieAlgebra& L);

/// Solvable radical via the Cartan criterion: the Killing-orthogonal
/// complement of the derived algebra.
Subspace radical(const GradedLieAlgebra& L);

struct LeviInfo {
    bool found = false;
    Subspace levi{0};
    std::vector<int> simple_ideal_dims;  // dims of the minimal ideals of the Levi part
};

/// Verifies a homogeneous-component complement to the radical: sums the
/// grading components meeting the radical trivially and checks it is a
/// semisimple complement subalgebra. Throws when no such complement
/// exists for a non-solvable algebra.
LeviInfo levi_check(const GradedLieAlgebra& L);

struct InvariantProfile {
    int dim_center = 0;
    int dim_derived = 0;
    std::optional<int> nilindex;   // empty = not nilpotent
    std::optional<int> solvindex;  // empty = not solvable
    bool is_abelian = false;
    bool is_nilpotent = false;
    bool is_solvable = false;
    bool is_semisimple = false;
    bool is_reductive = false;
    bool is_simple = false;
    int dim_radical = 0;
    int levi_dim = 0;

    bool operator==(const InvariantProfile& o) const;
    std::string str() const;
};

InvariantProfile profile(const GradedLieAlgebra& L);

/// Smallest ad-invariant subspace containing the span of v.
Subspace ideal_closure(const GradedLieAlgebra& L, const Vec& v);

}  // namespace g2c
