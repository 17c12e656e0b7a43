#include "g2c/fixtures.hpp"

#include "g2c/invariants.hpp"

namespace g2c {

namespace {

// Z_2^2 embeds into Z_2^3 as (a,b) -> (a,b,0): h0, h1, h2, h3 land on
// the grading indices 0, 1, 5, 2.
constexpr int kH0 = 0, kH1 = 1, kH2 = 5, kH3 = 2;

Vec unit(int dim, int at, long c = 1) {
    Vec v(dim);
    v[at] = Scalar(c);
    return v;
}

GradedLieAlgebra so3_plus_center() {
    // basis (x1, z, x2, x3); [x_i, x_{i+1}] = x_{i+2} cyclically, z central
    return GradedLieAlgebra({"x1", "z", "x2", "x3"}, {kH1, kH1, kH2, kH3}, [](int i, int j) {
        if (i == 0 && j == 2) return unit(4, 3);   // [x1,x2] = x3
        if (i == 2 && j == 3) return unit(4, 0);   // [x2,x3] = x1
        if (i == 0 && j == 3) return unit(4, 2, -1);  // [x1,x3] = -x2
        return Vec(4);
    });
}

GradedLieAlgebra so3() {
    return GradedLieAlgebra({"x1", "x2", "x3"}, {kH1, kH2, kH3}, [](int i, int j) {
        if (i == 0 && j == 1) return unit(3, 2);
        if (i == 1 && j == 2) return unit(3, 0);
        if (i == 0 && j == 2) return unit(3, 1, -1);
        return Vec(3);
    });
}

GradedLieAlgebra sl2_sl2() {
    // basis (x1, x2, e1, f1, e2, f2)
    return GradedLieAlgebra({"x1", "x2", "e1", "f1", "e2", "f2"}, {kH0, kH0, kH1, kH1, kH2, kH2},
                            [](int i, int j) {
                                Vec v(6);
                                if (i == 0 && j == 2) v[2] = Scalar(2);    // [x1,e1] = 2e1
                                if (i == 0 && j == 3) v[3] = Scalar(-2);   // [x1,f1] = -2f1
                                if (i == 2 && j == 3) v[0] = Scalar(1);    // [e1,f1] = x1
                                if (i == 1 && j == 4) v[4] = Scalar(2);
                                if (i == 1 && j == 5) v[5] = Scalar(-2);
                                if (i == 4 && j == 5) v[1] = Scalar(1);
                                return v;
                            });
}

ContractionMap eps_pair(int g, int h) {
    ContractionMap e;
    e.at(g, h) = Scalar(1);
    e.at(h, g) = Scalar(1);
    return e;
}

ContractionMap eps_all_ones() {
    ContractionMap e;
    for (int g = 0; g < 8; ++g)
        for (int h = 0; h < 8; ++h) e.at(g, h) = Scalar(1);
    return e;
}

}  // namespace

std::vector<std::string> Fixture::verify() const {
    std::vector<std::string> failures;
    GradedLieAlgebra first = contract(base, eps1);
    GradedLieAlgebra second = contract(base, eps2);

    if (is_bracket_preserving(iso, first, second) != facts.iso_preserves_brackets)
        failures.push_back(name + ": explicit map bracket preservation mismatch");
    if (iso_is_graded) {
        auto perm = component_permutation(iso, first, second);
        bool graded = perm.has_value();
        if (graded)
            for (int g = 0; g < 8; ++g)
                if (!first.component(g).empty() && (*perm)[g] != g) graded = false;
        if (!graded) failures.push_back(name + ": map expected to preserve every component");
    }
    if (facts.first_2step_nilpotent) {
        auto p = profile(first);
        if (!p.is_nilpotent || p.nilindex != 2)
            failures.push_back(name + ": first contraction not 2-step nilpotent");
    }
    Subspace comp1 = first.component_subspace(facts.distinguished_grade);
    Subspace comp2 = second.component_subspace(facts.distinguished_grade);
    if (center(first).contains(comp1) != facts.comp_central_in_first)
        failures.push_back(name + ": center membership wrong in first algebra");
    if (center(second).contains(comp2) != facts.comp_central_in_second)
        failures.push_back(name + ": center membership wrong in second algebra");
    return failures;
}

std::vector<Fixture> fixture_examples() {
    std::vector<Fixture> out;

    {
        Fixture f;
        f.name = "so3-plus-center";
        f.base = so3_plus_center();
        f.eps1 = eps_pair(kH1, kH2);
        f.eps2 = eps_pair(kH2, kH3);
        // x1 -> x2, x2 -> x3, x3 -> x1, z -> z
        Matrix iso(4, 4);
        iso.at(2, 0) = Scalar(1);
        iso.at(1, 1) = Scalar(1);
        iso.at(3, 2) = Scalar(1);
        iso.at(0, 3) = Scalar(1);
        f.iso = iso;
        f.facts.iso_preserves_brackets = true;
        f.facts.first_2step_nilpotent = true;
        f.facts.distinguished_grade = kH1;  // the 2-dimensional component
        f.facts.comp_central_in_first = false;
        f.facts.comp_central_in_second = true;
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "so3";
        f.base = so3();
        f.eps1 = eps_pair(kH1, kH2);
        f.eps2 = eps_pair(kH2, kH3);
        Matrix iso(3, 3);
        iso.at(1, 0) = Scalar(1);  // x1 -> x2
        iso.at(2, 1) = Scalar(1);  // x2 -> x3
        iso.at(0, 2) = Scalar(1);  // x3 -> x1
        f.iso = iso;
        f.facts.iso_preserves_brackets = true;
        f.facts.first_2step_nilpotent = true;
        f.facts.distinguished_grade = kH3;
        f.facts.comp_central_in_first = true;    // <x3> is the center of the first
        f.facts.comp_central_in_second = false;  // but not of the second
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "sl2-sl2";
        f.base = sl2_sl2();
        f.eps1 = eps_all_ones();
        f.eps2 = eps_all_ones();
        f.eps2.at(kH0, kH1) = Scalar(-1);
        f.eps2.at(kH1, kH0) = Scalar(-1);
        // x1 -> -x1, e1 -> -e1, f1 -> f1, rest fixed: a graded isomorphism
        // between the two contractions, though no diagonal one exists.
        Matrix iso = Matrix::identity(6);
        iso.at(0, 0) = Scalar(-1);
        iso.at(2, 2) = Scalar(-1);
        f.iso = iso;
        f.iso_is_graded = true;
        f.facts.iso_preserves_brackets = true;
        f.facts.distinguished_grade = kH0;
        f.facts.comp_central_in_first = false;
        f.facts.comp_central_in_second = false;
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace g2c
