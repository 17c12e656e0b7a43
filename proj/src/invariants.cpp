#include "g2c/invariants.hpp"

#include <stdexcept>

namespace g2c {

Subspace center(const GradedLieAlgebra& L) {
    // x central iff ad(i) x = 0 for all i; only nonzero rows matter
    int n = L.dim();
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
        Matrix ad = L.ad(i);
        for (int r = 0; r < n; ++r) {
            bool nonzero = false;
            for (int c = 0; c < n && !nonzero; ++c)
                if (!ad.at(r, c).is_zero()) nonzero = true;
            if (nonzero) rows.push_back(ad.row(r));
        }
    }
    if (rows.empty()) return Subspace::full(n);
    return kernel(Matrix::from_rows(rows));
}

Subspace bracket_space(const GradedLieAlgebra& L, const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) {
            Vec v = L.bracket(x, y);
            bool nonzero = false;
            for (const auto& c : v)
                if (!c.is_zero()) {
                    nonzero = true;
                    break;
                }
            if (nonzero) gens.push_back(std::move(v));
        }
    if (gens.empty()) return Subspace(L.dim());
    return Subspace::span(L.dim(), gens);
}

std::vector<Subspace> derived_series(const GradedLieAlgebra& L) {
    // Both series are monotone decreasing, so they stabilize within
    // dim(L) proper steps; the stabilized term is kept as the tail.
    std::vector<Subspace> chain;
    Subspace cur = Subspace::full(L.dim());
    for (;;) {
        Subspace next = bracket_space(L, cur, cur);
        bool stabilized = (next == cur);
        chain.push_back(next);
        if (stabilized || chain.back().is_zero()) break;
        cur = std::move(next);
    }
    return chain;
}

std::vector<Subspace> lower_central_series(const GradedLieAlgebra& L) {
    std::vector<Subspace> chain;
    Subspace full = Subspace::full(L.dim());
    Subspace cur = full;
    for (;;) {
        Subspace next = bracket_space(L, full, cur);
        bool stabilized = (next == cur);
        chain.push_back(next);
        if (stabilized || chain.back().is_zero()) break;
        cur = std::move(next);
    }
    return chain;
}

Matrix killing_form(const GradedLieAlgebra& L) {
    // trace(ad_i ad_j) via the sparse bracket rows, never forming the
    // matrix products
    int n = L.dim();
    Matrix k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar t;
            for (int c = 0; c < n; ++c)
                for (const auto& [m, v] : L.bracket(j, c))     // ad_j e_c
                    for (const auto& [r, w] : L.bracket(i, m)) // ad_i of that
                        if (r == c) t += v * w;
            k.at(i, j) = t;
            k.at(j, i) = t;
        }
    return k;
}

Subspace radical(const GradedLieAlgebra& L) {
    // x in radical iff K(x, y) = 0 for all y in [L, L].
    Matrix k = killing_form(L);
    Subspace derived = bracket_space(L, Subspace::full(L.dim()), Subspace::full(L.dim()));
    if (derived.is_zero()) return Subspace::full(L.dim());
    std::vector<Vec> rows;
    for (const auto& y : derived.basis()) rows.push_back(k.apply(y));  // K symmetric
    return kernel(Matrix::from_rows(rows));
}

Subspace ideal_closure(const GradedLieAlgebra& L, const Vec& v) {
    Subspace cur = Subspace::span(L.dim(), {v});
    for (;;) {
        std::vector<Vec> gens = cur.basis();
        for (int i = 0; i < L.dim(); ++i) {
            Vec bi(L.dim());
            bi[i] = Scalar(1);
            for (const auto& x : cur.basis()) gens.push_back(L.bracket(bi, x));
        }
        Subspace next = Subspace::span(L.dim(), gens);
        if (next == cur) return cur;
        cur = next;
    }
}

namespace {

bool killing_nondegenerate_on(const GradedLieAlgebra& L, const Subspace& s) {
    Matrix k = killing_form(L);
    Matrix gram(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Vec ky = k.apply(s.basis()[i]);
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Scalar acc;
            for (int t = 0; t < L.dim(); ++t) acc += s.basis()[j][t] * ky[t];
            gram.at(i, j) = acc;
        }
    }
    return rref(gram).rank == s.dim();
}

bool is_subalgebra(const GradedLieAlgebra& L, const Subspace& s) {
    return s.contains(bracket_space(L, s, s));
}

// Minimal ideals found by closing each basis vector of s (viewed inside
// the subalgebra generated brackets of L restricted to s).
std::vector<int> minimal_ideal_dims(const GradedLieAlgebra& L, const Subspace& s) {
    std::vector<Subspace> ideals;
    for (const auto& v : s.basis()) {
        // close span{v} under brackets with elements of s
        Subspace cur = Subspace::span(L.dim(), {v});
        for (;;) {
            std::vector<Vec> gens = cur.basis();
            for (const auto& w : s.basis())
                for (const auto& x : cur.basis()) gens.push_back(L.bracket(w, x));
            Subspace next = Subspace::span(L.dim(), gens);
            if (next == cur) break;
            cur = next;
        }
        bool seen = false;
        for (const auto& known : ideals)
            if (known == cur) seen = true;
        if (!seen) ideals.push_back(cur);
    }
    // keep the minimal ones
    std::vector<int> dims;
    for (const auto& a : ideals) {
        bool minimal = true;
        for (const auto& b : ideals)
            if (b.dim() < a.dim() && a.contains(b)) minimal = false;
        if (minimal) dims.push_back(static_cast<int>(a.dim()));
    }
    return dims;
}

}  // namespace

LeviInfo levi_check(const GradedLieAlgebra& L) {
    Subspace rad = radical(L);
    LeviInfo info;
    if (rad.dim() == static_cast<std::size_t>(L.dim())) {  // solvable: Levi = 0
        info.found = true;
        info.levi = Subspace(L.dim());
        return info;
    }
    // Candidate: sum of the grading components meeting the radical
    // trivially. The classification only ever needs this candidate.
    std::vector<Vec> gens;
    for (int g = 0; g < 8; ++g) {
        Subspace comp = L.component_subspace(g);
        if (comp.is_zero()) continue;
        if (comp.intersection_dim(rad) == 0)
            for (const auto& v : comp.basis()) gens.push_back(v);
    }
    Subspace cand = Subspace::span(L.dim(), gens);
    if (cand.dim() + rad.dim() != static_cast<std::size_t>(L.dim()) ||
        cand.intersection_dim(rad) != 0 || !is_subalgebra(L, cand) ||
        !killing_nondegenerate_on(L, cand))
        throw std::runtime_error("levi_check: no homogeneous complement to the radical");
    info.found = true;
    info.levi = cand;
    info.simple_ideal_dims = minimal_ideal_dims(L, cand);
    return info;
}

bool InvariantProfile::operator==(const InvariantProfile& o) const {
    return dim_center == o.dim_center && dim_derived == o.dim_derived && nilindex == o.nilindex &&
           solvindex == o.solvindex && is_abelian == o.is_abelian && is_nilpotent == o.is_nilpotent &&
           is_solvable == o.is_solvable && is_semisimple == o.is_semisimple &&
           is_reductive == o.is_reductive && is_simple == o.is_simple && dim_radical == o.dim_radical &&
           levi_dim == o.levi_dim;
}

std::string InvariantProfile::str() const {
    auto idx = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::string s = "d=(" + std::to_string(dim_center) + "," + std::to_string(dim_derived) + ")";
    s += " nil=" + idx(nilindex) + " solv=" + idx(solvindex);
    s += std::string(" flags=") + (is_abelian ? "A" : "") + (is_nilpotent ? "N" : "") +
         (is_solvable ? "S" : "") + (is_semisimple ? "ss" : "") + (is_reductive ? "R" : "") +
         (is_simple ? "!" : "");
    s += " rad=" + std::to_string(dim_radical) + " levi=" + std::to_string(levi_dim);
    return s;
}

InvariantProfile profile(const GradedLieAlgebra& L) {
    InvariantProfile p;
    Subspace z = center(L);
    p.dim_center = static_cast<int>(z.dim());

    auto lcs = lower_central_series(L);
    auto ds = derived_series(L);
    p.dim_derived = static_cast<int>(lcs.front().dim());
    p.is_abelian = lcs.front().is_zero();
    if (lcs.back().is_zero()) {
        p.is_nilpotent = true;
        p.nilindex = static_cast<int>(lcs.size());  // L^m = 0 at m = chain length
    }
    if (ds.back().is_zero()) {
        p.is_solvable = true;
        p.solvindex = static_cast<int>(ds.size());
    }

    Subspace rad = radical(L);
    p.dim_radical = static_cast<int>(rad.dim());
    p.is_semisimple = rad.is_zero();
    p.is_reductive = (rad == z);

    LeviInfo levi = levi_check(L);
    p.levi_dim = p.is_semisimple ? L.dim() : static_cast<int>(levi.levi.dim());

    p.is_simple = false;
    if (p.is_semisimple && !p.is_abelian) {
        p.is_simple = true;
        for (int i = 0; i < L.dim() && p.is_simple; ++i) {
            Vec v(L.dim());
            v[i] = Scalar(1);
            if (ideal_closure(L, v).dim() != static_cast<std::size_t>(L.dim())) p.is_simple = false;
        }
    }
    return p;
}

}  // namespace g2c
