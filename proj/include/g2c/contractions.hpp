#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "g2c/algebra.hpp"
#include "g2c/fano.hpp"
#include "g2c/g2.hpp"

namespace g2c {

/// Map X -> Q(i) on the 21 Fano edges; the combinatorial avatar of an
/// admissible graded contraction. Zero value = edge absent.
class AdmissibleMap {
public:
    AdmissibleMap() = default;

    /// eta^T: ones exactly on the given support.
    static AdmissibleMap ones(EdgeSet support);

    /// Values listed in lexicographic edge order of the support; all
    /// values must be nonzero.
    static AdmissibleMap from_values(EdgeSet support, const std::vector<Scalar>& values);

    const Scalar& at(int i, int j) const { return v_[edge_index(i, j)]; }
    const Scalar& at_edge(int e) const { return v_[e]; }
    void set(int i, int j, const Scalar& value) { v_[edge_index(i, j)] = value; }

    EdgeSet support() const;
    /// Values on the edges of t, in lexicographic edge order.
    std::vector<Scalar> values_on(EdgeSet t) const;

    bool operator==(const AdmissibleMap& o) const { return v_ == o.v_; }
    bool operator!=(const AdmissibleMap& o) const { return !(*this == o); }

private:
    std::array<Scalar, kNumEdges> v_{};
};

/// eta_{ijk} = eta_{i, j*k} * eta_{jk} for a generative ordered triple.
Scalar eta_ternary(const AdmissibleMap& eta, int i, int j, int k);

struct ConditionBResult {
    bool ok;
    std::array<int, 3> witness;  // a rotation whose ternary value breaks the cycle equality
};

/// (b1) holds by the unordered-edge encoding; checks the cyclic ternary
/// symmetry (b2) over all 28 generating triplets.
ConditionBResult check_conditions_b(const AdmissibleMap& eta);

inline bool in_A(const AdmissibleMap& eta) { return check_conditions_b(eta).ok; }

/// epsilon: G x G -> Q(i) over the Z_2^3 indices 0..7.
struct ContractionMap {
    std::array<std::array<Scalar, 8>, 8> v{};

    const Scalar& at(int g, int h) const { return v[g][h]; }
    Scalar& at(int g, int h) { return v[g][h]; }

    bool is_admissible() const;  // zero on (g,g), (e,.), (.,e)
    bool is_symmetric() const;
};

/// Fills epsilon from edge values, zero elsewhere. No membership check.
ContractionMap contraction_from_edges(const AdmissibleMap& eta);

/// Phi: admissible graded contractions <-> maps in A.
/// phi checks admissibility and membership (throws otherwise).
AdmissibleMap phi(const ContractionMap& eps);
ContractionMap phi_inv(const AdmissibleMap& eta);

/// Zeroes the diagonal and identity slots; the contracted bracket of g2
/// is unchanged (asserted against the structure tensor).
ContractionMap admissible_reduce(const ContractionMap& eps);

/// Componentwise-scaled algebra; verifies near-symmetry and the Jacobi
/// identity (throws JacobiError with a witness triple otherwise).
GradedLieAlgebra contract(const GradedLieAlgebra& L, const ContractionMap& eps);

/// eta^sigma_{ij} = eta_{sigma(i) sigma(j)}.
AdmissibleMap act_collineation(const AdmissibleMap& eta, const Collineation& sigma);

/// alpha: I -> nonzero scalars (extended by alpha(e) = 1).
struct NormalizationMap {
    std::array<Scalar, 8> a;  // index 1..7; a[0] unused

    NormalizationMap();
    explicit NormalizationMap(const std::array<Scalar, 7>& values);  // values[t] = alpha_{t+1}

    const Scalar& operator[](int i) const { return a[i]; }
    /// alpha_i alpha_j / alpha_{i*j}.
    Scalar edge_factor(int i, int j) const;
};

/// eta^alpha_{ij} = eta_{ij} alpha_i alpha_j / alpha_{i*j}; throws on a
/// zero alpha value. Support is unchanged.
AdmissibleMap act_normalization(const AdmissibleMap& eta, const NormalizationMap& alpha);

/// Exact-when-possible value used for normalization witnesses: carries a
/// Q(i) value as long as every operation (including square roots) stays
/// inside Q(i), and an f64 complex shadow throughout.
class WValue {
public:
    WValue() : approx_(1.0), exact_(Scalar(1)) {}
    WValue(Scalar s) : approx_(s.to_complex()), exact_(std::move(s)) {}  // NOLINT
    static WValue approx(std::complex<double> z) {
        WValue w;
        w.exact_.reset();
        w.approx_ = z;
        return w;
    }

    bool is_exact() const { return exact_.has_value(); }
    const Scalar& exact() const { return *exact_; }
    std::complex<double> value() const { return approx_; }

    WValue operator*(const WValue& o) const;
    WValue operator/(const WValue& o) const;
    WValue sqrt() const;  // principal branch; demotes to approx when needed
    WValue inverse() const;

private:
    std::complex<double> approx_;
    std::optional<Scalar> exact_;
};

/// Outcome of reducing an admissible map with canonical support to its
/// published normal form.
struct NormalForm {
    int class_id = 0;                 // 1..24
    std::vector<Scalar> params;       // exact: {} | {lambda} | {lambda^2} | {lambda^2, mu^2}
    std::array<WValue, 8> alpha;      // witness normalization, indices 1..7
    bool float_witness = false;       // true when the witness left Q(i)

    /// The canonical eta this witness reaches (exact entries only when
    /// representable; class 14 always, 17/20 when the square roots are
    /// exact).
    std::optional<AdmissibleMap> canonical_eta() const;

    /// Canonical tuple over the support's lexicographic edge order, with
    /// the principal square root shown for the classes that store
    /// squared data, e.g. "(1,1,1,15/8)".
    std::string display_tuple() const;
    std::string str() const;
};

/// Requires eta in A with support exactly equal to a published T_i
/// (callers canonicalize first via canonical_rep + act_collineation).
NormalForm normal_form(const AdmissibleMap& eta);

/// Equivalence-class label: canonical support class (10 merged into 8)
/// plus the canonicalized parameter data of the three families.
struct EquivClassLabel {
    int class_id = 0;             // in 1..24 minus {10}
    std::vector<Scalar> params;   // exact; squared data for classes 17 and 20

    bool operator==(const EquivClassLabel& o) const {
        return class_id == o.class_id && params == o.params;
    }
    bool operator!=(const EquivClassLabel& o) const { return !(*this == o); }
    std::string str() const;
};

EquivClassLabel equivalence_label(const AdmissibleMap& eta);

/// The component-swapping linear map theta_{ij} over the canonical g2
/// basis: identity off lambda_i + lambda_j, and on the line-adapted
/// bases E/F of the line through i and j it sends E_i -> -ratio E_j,
/// F_i -> -ratio F_j, E_j -> E_i, F_j -> F_i.
Matrix build_theta(const G2System& sys, int i, int j, const Scalar& ratio = Scalar(1));

inline bool is_automorphism(const Matrix& phi, const GradedLieAlgebra& L) {
    return is_bracket_preserving(phi, L, L);
}

}  // namespace g2c
