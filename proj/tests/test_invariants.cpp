#include <doctest.h>

#include "g2c/contractions.hpp"
#include "g2c/invariants.hpp"
#include "g2c/nice_sets.hpp"
#include "g2c/random_gen.hpp"

using namespace g2c;

namespace {
const GradedLieAlgebra& g2() { return build_g2().algebra(); }
GradedLieAlgebra contract_id(int id) {
    return contract(g2(), contraction_from_edges(AdmissibleMap::ones(class_representative(id))));
}
Subspace comp_sum(const GradedLieAlgebra& L, std::initializer_list<int> grades) {
    Subspace s(L.dim());
    for (int g : grades) s = s.sum(L.component_subspace(g));
    return s;
}
}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("center") {
    // abelian: everything
    GradedLieAlgebra abelian = contract_id(1);
    CHECK(center(abelian).dim() == 14);
    // g2 simple: zero
    CHECK(center(g2()).is_zero());
    // T2: all components away from the support edge
    GradedLieAlgebra a2 = contract_id(2);
    CHECK(center(a2) == comp_sum(a2, {3, 4, 5, 6, 7}));
    CHECK(center(a2).dim() == 10);
}

TEST_CASE("series") {
    // T21: lower central series reaches zero at step 3
    GradedLieAlgebra a21 = contract_id(21);
    auto lcs = lower_central_series(a21);
    CHECK(lcs.size() == 3);
    CHECK(lcs.back().is_zero());
    CHECK(lcs[1] == comp_sum(a21, {4}));

    // T22: derived series zero at step 3, lower central stabilizes nonzero
    GradedLieAlgebra a22 = contract_id(22);
    auto ds = derived_series(a22);
    CHECK(ds.size() == 3);
    CHECK(ds.back().is_zero());
    CHECK(ds[1] == comp_sum(a22, {4, 7}));
    auto lcs22 = lower_central_series(a22);
    CHECK(!lcs22.back().is_zero());
    CHECK(lcs22.back() == comp_sum(a22, {2, 3, 4, 5, 6, 7}));

    // T4: the lower central series stalls at lambda2 + lambda5
    GradedLieAlgebra a4 = contract_id(4);
    auto lcs4 = lower_central_series(a4);
    CHECK(!lcs4.back().is_zero());
    CHECK(lcs4.back() == comp_sum(a4, {2, 5}));
    CHECK(lcs4.front() == comp_sum(a4, {2, 5}));

    // monotone containment of both series
    for (int id : {4, 9, 13, 21, 22}) {
        GradedLieAlgebra a = contract_id(id);
        auto d = derived_series(a);
        auto l = lower_central_series(a);
        for (std::size_t t = 0; t + 1 < d.size(); ++t) CHECK(d[t].contains(d[t + 1]));
        for (std::size_t t = 0; t + 1 < l.size(); ++t) CHECK(l[t].contains(l[t + 1]));
        for (std::size_t t = 0; t < std::min(d.size(), l.size()); ++t) CHECK(l[t].contains(d[t]));
    }
}

TEST_CASE("killing form and radical") {
    // g2: nondegenerate Killing form, zero radical
    Matrix k = killing_form(g2());
    CHECK(rref(k).rank == 14);
    CHECK(radical(g2()).is_zero());

    // T23: radical is the abelian ideal of the 4 outer components
    GradedLieAlgebra a23 = contract_id(23);
    Subspace r23 = radical(a23);
    CHECK(r23 == comp_sum(a23, {3, 4, 6, 7}));
    CHECK(r23.dim() == 8);
    CHECK(bracket_space(a23, r23, r23).is_zero());

    // T6: radical equals the center (reductive)
    GradedLieAlgebra a6 = contract_id(6);
    CHECK(radical(a6) == center(a6));
    CHECK(radical(a6).dim() == 8);

    // nilpotent algebra: Killing form vanishes on the derived algebra
    GradedLieAlgebra a21 = contract_id(21);
    Matrix k21 = killing_form(a21);
    Subspace derived = bracket_space(a21, Subspace::full(14), Subspace::full(14));
    for (const auto& v : derived.basis()) {
        Vec kv = k21.apply(v);
        for (const auto& c : kv) CHECK(c.is_zero());
    }
}

TEST_CASE("levi check") {
    // semisimple: the whole algebra
    LeviInfo whole = levi_check(g2());
    CHECK(whole.levi.dim() == 14);

    // T6: Levi = lambda1 + lambda2 + lambda5 with two 3-dim simple ideals
    GradedLieAlgebra a6 = contract_id(6);
    LeviInfo l6 = levi_check(a6);
    CHECK(l6.levi == comp_sum(a6, {1, 2, 5}));
    CHECK(l6.simple_ideal_dims == std::vector<int>{3, 3});

    // T23: same Levi, abelian radical
    GradedLieAlgebra a23 = contract_id(23);
    LeviInfo l23 = levi_check(a23);
    CHECK(l23.levi == comp_sum(a23, {1, 2, 5}));
    CHECK(l23.simple_ideal_dims == std::vector<int>{3, 3});

    // solvable: zero Levi
    CHECK(levi_check(contract_id(13)).levi.is_zero());
}

TEST_CASE("profiles against the published table") {
    // spot rows; the full 24-row sweep lives in the acceptance suite
    InvariantProfile p1 = profile(contract_id(1));
    CHECK(p1.is_abelian);
    CHECK(p1.dim_center == 14);
    CHECK(p1.dim_derived == 0);

    InvariantProfile p13 = profile(contract_id(13));
    CHECK(p13.dim_center == 4);
    CHECK(p13.dim_derived == 8);
    CHECK(!p13.is_nilpotent);
    CHECK(p13.solvindex == 2);

    InvariantProfile p17 = profile(contract_id(17));
    CHECK(p17.dim_center == 2);
    CHECK(p17.dim_derived == 10);
    CHECK(p17.solvindex == 2);
    CHECK(!p17.is_nilpotent);

    InvariantProfile p21 = profile(contract_id(21));
    CHECK(p21.nilindex == 3);
    CHECK(p21.solvindex == 2);

    InvariantProfile p22 = profile(contract_id(22));
    CHECK(p22.solvindex == 3);
    CHECK(!p22.is_nilpotent);

    InvariantProfile p24 = profile(contract_id(24));
    CHECK(p24.is_simple);
    CHECK(p24.is_semisimple);
    CHECK(p24.levi_dim == 14);

    InvariantProfile p6 = profile(contract_id(6));
    CHECK(p6.is_reductive);
    CHECK(!p6.is_semisimple);
    CHECK(!p6.is_solvable);
    CHECK(p6.levi_dim == 6);

    InvariantProfile p23 = profile(contract_id(23));
    CHECK(!p23.is_reductive);
    CHECK(p23.dim_radical == 8);
    CHECK(p23.levi_dim == 6);

    // flag consistency over every class
    for (int id = 1; id <= 24; ++id) {
        InvariantProfile p = profile(contract_id(id));
        if (p.is_abelian) CHECK(p.is_nilpotent);
        if (p.is_nilpotent) CHECK(p.is_solvable);
        if (p.is_semisimple) CHECK(p.is_reductive);
        if (p.is_simple) CHECK(p.is_semisimple);
    }
}

TEST_CASE("center formula for random admissible maps") {
    Rng rng(53);
    auto all = enumerate_all_nice();
    for (int t = 0; t < 25; ++t) {
        EdgeSet T = all[rng() % all.size()];
        AdmissibleMap eta = random_admissible(rng, T);
        GradedLieAlgebra con = contract(g2(), contraction_from_edges(eta));
        Subspace expected(14);
        for (int i = 1; i <= 7; ++i) {
            bool touched = false;
            for (auto [a, b] : edge_list(T))
                if (a == i || b == i) touched = true;
            if (!touched) expected = expected.sum(con.component_subspace(i));
        }
        CHECK(center(con) == expected);
    }
}

TEST_CASE("ideal closure") {
    // any basis vector of g2 generates the whole algebra
    for (int i = 0; i < 14; i += 3) {
        Vec v(14);
        v[i] = Scalar(1);
        CHECK(ideal_closure(g2(), v).dim() == 14);
    }
    // in the T6 contraction, x1 generates only one sl2 plus nothing else
    GradedLieAlgebra a6 = contract_id(6);
    Vec v(14);
    v[G2System::x_index(1)] = Scalar(1);
    CHECK(ideal_closure(a6, v).dim() == 3);
}

}  // TEST_SUITE
