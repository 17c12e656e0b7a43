#include "g2c/algebra.hpp"

#include <stdexcept>

#include "g2c/fano.hpp"

namespace g2c {

namespace {
GradedLieAlgebra::SparseVec to_sparse(const Vec& v) {
    GradedLieAlgebra::SparseVec s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s.emplace_back(static_cast<int>(k), v[k]);
    return s;
}
}  // namespace

GradedLieAlgebra::GradedLieAlgebra(std::vector<std::string> names, std::vector<int> grades,
                                   const std::function<Vec(int, int)>& brackets)
    : names_(std::move(names)), grades_(std::move(grades)) {
    if (names_.size() != grades_.size())
        throw std::invalid_argument("GradedLieAlgebra: labels and grades disagree");
    int n = dim();
    br_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec v = brackets(i, j);
            if (static_cast<int>(v.size()) != n)
                throw std::invalid_argument("GradedLieAlgebra: bracket has wrong dimension");
            br_[i * n + j] = to_sparse(v);
            for (auto& x : v) x = -x;
            br_[j * n + i] = to_sparse(v);
        }
}

Vec GradedLieAlgebra::bracket(const Vec& x, const Vec& y) const {
    int n = dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("bracket: dimension mismatch");
    Vec out(n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            const SparseVec& br = bracket(i, j);
            if (br.empty() || y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : br) out[k] += c * v;
        }
    }
    return out;
}

Vec GradedLieAlgebra::bracket_basis(int i, int j) const {
    Vec out(dim());
    for (const auto& [k, v] : bracket(i, j)) out[k] = v;
    return out;
}

Matrix GradedLieAlgebra::ad(int i) const {
    int n = dim();
    Matrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (const auto& [k, v] : bracket(i, j)) m.at(k, j) = v;
    return m;
}

Matrix GradedLieAlgebra::ad(const Vec& x) const {
    int n = dim();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j)
            for (const auto& [k, v] : bracket(i, j)) m.at(k, j) += x[i] * v;
    }
    return m;
}

std::vector<int> GradedLieAlgebra::component(int grade) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (grades_[i] == grade) out.push_back(i);
    return out;
}

Subspace GradedLieAlgebra::component_subspace(int grade) const {
    std::vector<Vec> rows;
    for (int i : component(grade)) {
        Vec v(dim());
        v[i] = Scalar(1);
        rows.push_back(std::move(v));
    }
    return Subspace::span(dim(), rows);
}

std::optional<std::array<int, 3>> GradedLieAlgebra::jacobi_witness() const {
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec acc(n);
                auto add_term = [&](int a, int b, int c) {
                    for (const auto& [m, v] : bracket(b, c))
                        for (const auto& [t, w] : bracket(a, m)) acc[t] += v * w;
                };
                add_term(i, j, k);
                add_term(j, k, i);
                add_term(k, i, j);
                for (const auto& x : acc)
                    if (!x.is_zero()) return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

void GradedLieAlgebra::require_jacobi() const {
    if (auto w = jacobi_witness()) throw JacobiError(*w);
}

bool GradedLieAlgebra::grading_compatible() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (const auto& [k, v] : bracket(i, j)) {
                (void)v;
                if (grades_[k] != star0(grades_[i], grades_[j])) return false;
            }
    return true;
}

GradedLieAlgebra GradedLieAlgebra::scaled(const std::function<Scalar(int, int)>& factor) const {
    return GradedLieAlgebra(names_, grades_, [&](int i, int j) {
        Vec v = bracket_basis(i, j);
        Scalar f = factor(i, j);
        for (auto& x : v) x = x * f;
        return v;
    });
}

bool GradedLieAlgebra::same_table(const GradedLieAlgebra& o) const {
    if (dim() != o.dim()) return false;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (bracket(i, j) != o.bracket(i, j)) return false;
    return true;
}

bool is_bracket_preserving(const Matrix& phi, const GradedLieAlgebra& src, const GradedLieAlgebra& dst) {
    int n = src.dim();
    if (dst.dim() != n || phi.rows() != static_cast<std::size_t>(n) || phi.cols() != static_cast<std::size_t>(n))
        return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec lhs = phi.apply(src.bracket_basis(i, j));
            Vec rhs = dst.bracket(phi.col(i), phi.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

std::optional<std::array<int, 8>> component_permutation(const Matrix& phi, const GradedLieAlgebra& src,
                                                        const GradedLieAlgebra& dst) {
    std::array<int, 8> perm;
    perm.fill(-1);
    for (int g = 0; g < 8; ++g) {
        auto idx = src.component(g);
        if (idx.empty()) continue;
        int target = -1;
        for (int i : idx) {
            Vec img = phi.col(i);
            for (int t = 0; t < dst.dim(); ++t) {
                if (img[t].is_zero()) continue;
                if (target == -1) target = dst.grade(t);
                if (dst.grade(t) != target) return std::nullopt;
            }
        }
        perm[g] = target;  // -1 if the whole component maps to zero
    }
    return perm;
}

}  // namespace g2c
