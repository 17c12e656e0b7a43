#include "g2c/g2.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2c/fano.hpp"

namespace g2c {

namespace {

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

bool in_line(int i, const std::array<int, 3>& line) {
    return i == line[0] || i == line[1] || i == line[2];
}

}  // namespace

std::optional<int> derivation_degree(const Matrix& d) {
    if (d.rows() != 8 || d.cols() != 8) return std::nullopt;
    int degree = -1;
    for (int m = 0; m < 8; ++m)
        for (int r = 0; r < 8; ++r) {
            if (d.at(r, m).is_zero()) continue;
            int g = star0(r, m);  // r = g + m  =>  g = r + m
            if (degree == -1) degree = g;
            if (g != degree) return std::nullopt;
        }
    if (degree == -1) return std::nullopt;  // zero matrix: no defined degree
    return degree;
}

ComponentBasis component_basis(int i, const std::array<int, 3>& line, int k) {
    if (star(line[0], line[1]) != line[2]) throw std::invalid_argument("component_basis: not a line");
    if (!in_line(i, line)) throw std::invalid_argument("component_basis: i not on line");
    if (k < 1 || k > 7 || in_line(k, line)) throw std::invalid_argument("component_basis: k must be off the line");

    std::array<int, 2> rest{};
    int nrest = 0;
    for (int t : line)
        if (t != i) rest[nrest++] = t;
    int j = rest[0], j2 = rest[1];

    // E: zero on the quaternion part Q = <1, e_i, e_j, e_{i*j}>, and
    // q e_k -> (e_i q) e_k / 2 on Q e_k. For a basis vector e_m in Q e_k
    // we have q = -e_m e_k.
    Matrix E(8, 8);
    Scalar half(1, 2);
    for (int m = 0; m < 8; ++m) {
        if (m == 0 || in_line(m, line)) continue;
        Octonion q = -(Octonion::basis(m) * Octonion::basis(k));
        Octonion img = half * ((Octonion::basis(i) * q) * Octonion::basis(k));
        for (int r = 0; r < 8; ++r) E.at(r, m) = img[r];
    }

    // F = D(e_j, e_i e_j) / 4, independent of the choice of j.
    Scalar quarter(1, 4);
    Matrix F = derivation_matrix(Octonion::basis(j), Octonion::basis(i) * Octonion::basis(j)) * quarter;
    Matrix F2 = derivation_matrix(Octonion::basis(j2), Octonion::basis(i) * Octonion::basis(j2)) * quarter;
    if (!(F == F2)) throw std::logic_error("component_basis: the two F choices disagree");

    // Direct form of F: q -> [e_i, q]/2 on Q, q e_k -> -(q e_i) e_k / 2.
    Matrix Fd(8, 8);
    for (int m = 0; m < 8; ++m) {
        Octonion img;
        if (m == 0 || in_line(m, line)) {
            img = half * commutator(Octonion::basis(i), Octonion::basis(m));
        } else {
            Octonion q = -(Octonion::basis(m) * Octonion::basis(k));
            img = -(half * ((q * Octonion::basis(i)) * Octonion::basis(k)));
        }
        for (int r = 0; r < 8; ++r) Fd.at(r, m) = img[r];
    }
    if (!(F == Fd)) throw std::logic_error("component_basis: F disagrees with its split form");

    if (!is_derivation(E) || !is_derivation(F)) throw std::logic_error("component_basis: not derivations");
    if (derivation_degree(E) != i || derivation_degree(F) != i)
        throw std::logic_error("component_basis: E or F not homogeneous of degree i");
    if (!Matrix::commutator(E, F).is_zero()) throw std::logic_error("component_basis: [E,F] != 0");
    if (span_closure({flatten(E), flatten(F)}).dim() != 2)
        throw std::logic_error("component_basis: E, F dependent");

    return ComponentBasis{i, line, k, std::move(E), std::move(F)};
}

GradedLieAlgebra structure_constants(const std::vector<Matrix>& basis, const std::vector<int>& grades,
                                     const std::vector<std::string>& names) {
    if (basis.size() != grades.size()) throw std::invalid_argument("structure_constants: size mismatch");
    int n = static_cast<int>(basis.size());
    std::vector<Vec> cols;
    cols.reserve(n);
    for (const auto& m : basis) cols.push_back(flatten(m));
    Matrix span_matrix = Matrix::from_cols(cols);
    auto coords = [&](const Matrix& m) {
        auto sol = solve(span_matrix, flatten(m));
        if (!sol) throw std::runtime_error("structure_constants: bracket leaves the span");
        return *sol;
    };
    std::vector<std::string> labels = names;
    if (labels.empty())
        for (int t = 0; t < n; ++t) labels.push_back("b" + std::to_string(t));
    return GradedLieAlgebra(labels, grades, [&](int a, int b) {
        return coords(Matrix::commutator(basis[a], basis[b]));
    });
}

G2System::G2System() {
    // Canonical component bases.
    std::vector<Matrix> basis;
    std::vector<int> grades;
    std::vector<std::string> names;
    for (int i = 1; i <= 7; ++i) {
        std::array<int, 3> line = lines_through(i).front();  // lexicographically first
        int k = 1;
        while (in_line(k, line)) ++k;
        comps_[i] = component_basis(i, line, k);
        basis.push_back(comps_[i].E);
        basis.push_back(comps_[i].F);
        grades.push_back(i);
        grades.push_back(i);
        names.push_back("x" + std::to_string(i));
        names.push_back("y" + std::to_string(i));
    }
    basis_ = basis;

    // The 21 generators D(e_a, e_b) must span exactly this 14-dim space.
    std::vector<Vec> gen_rows;
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            gen_rows.push_back(flatten(derivation_matrix(Octonion::basis(a), Octonion::basis(b))));
    Subspace der_span = span_closure(gen_rows);
    if (der_span.dim() != 14) throw std::logic_error("build_g2: dim span D(e_a,e_b) != 14");
    std::vector<Vec> basis_rows;
    for (const auto& m : basis_) basis_rows.push_back(flatten(m));
    if (span_closure(basis_rows).dim() != 14 || !der_span.contains(span_closure(basis_rows)))
        throw std::logic_error("build_g2: component bases do not span Der(O)");

    // Cached coordinate projector: pick 14 positions of vec(d) whose
    // restriction of the 64x14 span matrix is invertible.
    Matrix span_matrix = Matrix::from_cols(basis_rows);  // 64 x 14 (flattened as columns)
    {
        RrefResult r = rref(Matrix::from_rows(basis_rows));  // 14 x 64
        probe_rows_ = r.pivot_cols;                          // positions in vec(d)
        Matrix probe(14, 14);
        for (int t = 0; t < 14; ++t)
            for (int s = 0; s < 14; ++s) probe.at(t, s) = span_matrix.at(probe_rows_[t], s);
        // invert via rref of [probe | I]
        Matrix aug(14, 28);
        for (int a = 0; a < 14; ++a) {
            for (int b = 0; b < 14; ++b) aug.at(a, b) = probe.at(a, b);
            aug.at(a, 14 + a) = Scalar(1);
        }
        RrefResult inv = rref(aug);
        if (inv.rank != 14) throw std::logic_error("build_g2: projector not invertible");
        probe_inverse_ = Matrix(14, 14);
        for (int a = 0; a < 14; ++a)
            for (int b = 0; b < 14; ++b) probe_inverse_.at(a, b) = inv.reduced.at(a, 14 + b);
    }

    algebra_ = structure_constants(basis_, grades, names);

    // Hard validation of the construction.
    if (algebra_.dim() != 14) throw std::logic_error("build_g2: dim != 14");
    for (int i = 1; i <= 7; ++i)
        if (algebra_.component(i).size() != 2) throw std::logic_error("build_g2: component dim != 2");
    if (!algebra_.grading_compatible()) throw std::logic_error("build_g2: grading incompatible");
    algebra_.require_jacobi();
    for (int i = 1; i <= 7; ++i)
        if (!algebra_.bracket(x_index(i), y_index(i)).empty())
            throw std::logic_error("build_g2: component not abelian");
}

const G2System& G2System::instance() {
    static const G2System sys;
    return sys;
}

const ComponentBasis& G2System::component(int i) const {
    if (i < 1 || i > 7) throw std::out_of_range("G2System::component: index out of range");
    return comps_[i];
}

const Matrix& G2System::basis_matrix(int t) const {
    if (t < 0 || t >= 14) throw std::out_of_range("G2System::basis_matrix: index out of range");
    return basis_[t];
}

Vec G2System::coords(const Matrix& derivation) const {
    if (derivation.rows() != 8 || derivation.cols() != 8)
        throw std::invalid_argument("G2System::coords: need 8x8 matrix");
    Vec flat = flatten(derivation);
    Vec probe(14);
    for (int t = 0; t < 14; ++t) probe[t] = flat[probe_rows_[t]];
    Vec c = probe_inverse_.apply(probe);
    if (!(matrix_of(c) == derivation)) throw std::invalid_argument("G2System::coords: matrix not in Der(O)");
    return c;
}

Matrix G2System::matrix_of(const Vec& coords) const {
    if (coords.size() != 14) throw std::invalid_argument("G2System::matrix_of: need 14 coordinates");
    Matrix m(8, 8);
    for (int t = 0; t < 14; ++t)
        if (!coords[t].is_zero()) m = m + basis_[t] * coords[t];
    return m;
}

const G2System& build_g2() { return G2System::instance(); }

std::pair<Scalar, Scalar> eigenvalues_2x2(const Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("eigenvalues_2x2: need 2x2");
    Scalar tr = m.at(0, 0) + m.at(1, 1);
    Scalar det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    Scalar disc = tr * tr - Scalar(4) * det;
    auto root = sqrt_exact(disc);
    if (!root) throw std::domain_error("eigenvalues_2x2: eigenvalues not in Q(i)");
    Scalar half(1, 2);
    return {(tr + *root) * half, (tr - *root) * half};
}

std::pair<Scalar, Scalar> ad_square_spectrum(const GradedLieAlgebra& L, const Vec& z, int grade_j) {
    auto idx = L.component(grade_j);
    if (idx.size() != 2) throw std::invalid_argument("ad_square_spectrum: component is not 2-dimensional");
    Matrix ad = L.ad(z);
    Matrix ad2 = ad * ad;
    // The restriction must stay inside the component.
    Matrix block(2, 2);
    for (int s = 0; s < 2; ++s) {
        Vec col = ad2.col(idx[s]);
        for (int r = 0; r < L.dim(); ++r) {
            if (col[r].is_zero()) continue;
            if (r != idx[0] && r != idx[1])
                throw std::logic_error("ad_square_spectrum: ad^2 leaves the component");
        }
        block.at(0, s) = col[idx[0]];
        block.at(1, s) = col[idx[1]];
    }
    return eigenvalues_2x2(block);
}

std::pair<Scalar, Scalar> ad_square_spectrum(const G2System& sys, int i, const Scalar& a, const Scalar& b,
                                             int j) {
    const ComponentBasis& cb = sys.component(i);
    if (j == i || !in_line(j, cb.line))
        throw std::invalid_argument("ad_square_spectrum: j must lie on the line of i");
    Vec z(14);
    z[G2System::x_index(i)] = a;
    z[G2System::y_index(i)] = b;
    return ad_square_spectrum(sys.algebra(), z, j);
}

}  // namespace g2c
