#include <doctest.h>

#include <set>

#include "g2c/fano.hpp"
#include "g2c/g2.hpp"
#include "g2c/random_gen.hpp"

using namespace g2c;

namespace {
Octonion e(int i) { return Octonion::basis(i); }
}

TEST_SUITE("g2") {

TEST_CASE("component basis matches the change-of-basis table") {
    // For the line (1,2,5) with k=3 the four derivations E, F, E', F'
    // act as d(e_i) = a_{d,i} e_{sigma(i)} for sigma = (2 5)(3 6)(4 7).
    // The published coefficient table lists these actions at twice the
    // defining normalization (under which [x1,x2] = x5 holds on the
    // nose), so the match is up to the single uniform factor 1/2.
    ComponentBasis b = component_basis(1, {1, 2, 5}, 3);
    ComponentBasis bp = component_basis(1, {1, 3, 6}, 2);

    const int sigma[8] = {0, 1, 5, 6, 7, 2, 3, 4};
    const long aE[8] = {0, 0, 0, 1, 1, 0, -1, -1};
    const long aF[8] = {0, 0, 2, -1, 1, -2, 1, -1};
    const long aEp[8] = {0, 0, 1, 0, 1, -1, 0, -1};
    const long aFp[8] = {0, 0, -1, 2, 1, 1, -2, -1};

    const Scalar table_scale(1, 2);
    auto check_table = [&](const Matrix& d, const long* coef) {
        for (int i = 1; i <= 7; ++i) {
            Octonion img = apply_matrix(d, e(i));
            CHECK(img == (Scalar(coef[i]) * table_scale) * e(sigma[i]));
        }
    };
    check_table(b.E, aE);
    check_table(b.F, aF);
    check_table(bp.E, aEp);
    check_table(bp.F, aFp);

    // E' = (E+F)/2, F' = (3E-F)/2 (scale-independent)
    Scalar half(1, 2);
    CHECK(bp.E == (b.E + b.F) * half);
    CHECK(bp.F == (b.E * Scalar(3) - b.F) * half);
}

TEST_CASE("component basis validation") {
    CHECK_THROWS(component_basis(4, {1, 2, 5}, 3));   // i not on line
    CHECK_THROWS(component_basis(1, {1, 2, 5}, 5));   // k on line
    CHECK_THROWS(component_basis(1, {1, 2, 4}, 3));   // not a line
}

TEST_CASE("E-choice consistency across k") {
    // E^{l,k} = E^{l,i*k} = -E^{l,j*k} = -E^{l,i*j*k}
    for (const auto& line : fano_lines()) {
        for (int i : line) {
            int j = (line[0] == i) ? line[1] : line[0];
            int ij = star(i, j);
            int k = 1;
            while (k == line[0] || k == line[1] || k == line[2]) ++k;
            Matrix base = component_basis(i, line, k).E;
            CHECK(component_basis(i, line, star(i, k)).E == base);
            CHECK(component_basis(i, line, star(j, k)).E == base * Scalar(-1));
            CHECK(component_basis(i, line, star(ij, k)).E == base * Scalar(-1));
        }
    }
}

TEST_CASE("line relations with a shared k") {
    // on (1,2,5) with k=3: [x1,x2] = x5, [y1,y2] = y5, [x_r, y_s] = 0
    ComponentBasis b1 = component_basis(1, {1, 2, 5}, 3);
    ComponentBasis b2 = component_basis(2, {1, 2, 5}, 3);
    ComponentBasis b5 = component_basis(5, {1, 2, 5}, 3);
    CHECK(Matrix::commutator(b1.E, b2.E) == b5.E);
    CHECK(Matrix::commutator(b1.F, b2.F) == b5.F);
    CHECK(Matrix::commutator(b2.E, b5.E) == b1.E);
    CHECK(Matrix::commutator(b5.E, b1.E) == b2.E);
    for (const auto& p : {&b1, &b2, &b5})
        for (const auto& q : {&b1, &b2, &b5})
            CHECK(Matrix::commutator(p->E, q->F).is_zero());
}

TEST_CASE("build validates and the structure constants match the matrices") {
    const G2System& sys = build_g2();
    const GradedLieAlgebra& L = sys.algebra();
    CHECK(L.dim() == 14);
    for (int i = 1; i <= 7; ++i) CHECK(L.component(i).size() == 2);
    CHECK(L.component(0).empty());
    CHECK(L.grading_compatible());
    CHECK(!L.jacobi_witness().has_value());

    // independent oracle: brackets through the 8x8 commutators
    for (int a = 0; a < 14; ++a)
        for (int b = 0; b < 14; ++b) {
            Matrix comm = Matrix::commutator(sys.basis_matrix(a), sys.basis_matrix(b));
            CHECK(sys.coords(comm) == L.bracket_basis(a, b));
        }
}

TEST_CASE("coordinates round-trip and reject non-derivations") {
    const G2System& sys = build_g2();
    Rng rng(41);
    Vec c(14);
    for (auto& x : c) x = random_scalar(rng);
    CHECK(sys.coords(sys.matrix_of(c)) == c);
    Matrix junk(8, 8);
    junk.at(0, 1) = Scalar(1);
    CHECK_THROWS(sys.coords(junk));
}

TEST_CASE("double bracket test vectors") {
    const G2System& sys = build_g2();
    const GradedLieAlgebra& L = sys.algebra();
    // x = D(e1,e2) in comp 5, y = D(e2,e3) in comp 7, z = D(e1,e5) in comp 2
    Vec x = sys.coords(derivation_matrix(e(1), e(2)));
    Vec y = sys.coords(derivation_matrix(e(2), e(3)));
    Vec z = sys.coords(derivation_matrix(e(1), e(5)));
    auto nonzero_grades = [&](const Vec& v) {
        std::set<int> g;
        for (int t = 0; t < 14; ++t)
            if (!v[t].is_zero()) g.insert(L.grade(t));
        return g;
    };
    CHECK(nonzero_grades(x) == std::set<int>{5});
    CHECK(nonzero_grades(y) == std::set<int>{7});
    CHECK(nonzero_grades(z) == std::set<int>{2});

    Vec yzx = L.bracket(y, L.bracket(z, x));
    Vec expect1 = sys.coords(derivation_matrix(e(3), e(5)) * Scalar(-16) +
                             derivation_matrix(e(2), e(6)) * Scalar(-8));
    CHECK(yzx == expect1);
    Vec xyz = L.bracket(x, L.bracket(y, z));
    Vec expect2 = sys.coords(derivation_matrix(e(3), e(5)) * Scalar(-8) +
                             derivation_matrix(e(2), e(6)) * Scalar(12));
    CHECK(xyz == expect2);
    // linear independence of the two double brackets
    CHECK(span_closure({yzx, xyz}).dim() == 2);
}

TEST_CASE("structure_constants rejects non-closed spans") {
    const G2System& sys = build_g2();
    std::vector<Matrix> partial = {sys.basis_matrix(0), sys.basis_matrix(2)};  // x1, x2
    std::vector<int> grades = {1, 2};
    CHECK_THROWS(structure_constants(partial, grades));
}

TEST_CASE("ad square spectrum") {
    const G2System& sys = build_g2();
    auto [a1, a2] = ad_square_spectrum(sys, 1, Scalar(1), Scalar(0), 2);
    CHECK(((a1 == Scalar(-1) && a2 == Scalar(0)) || (a1 == Scalar(0) && a2 == Scalar(-1))));
    auto [b1, b2] = ad_square_spectrum(sys, 1, Scalar(0), Scalar(0), 2);
    CHECK(b1 == Scalar(0));
    CHECK(b2 == Scalar(0));
    auto [c1, c2] = ad_square_spectrum(sys, 1, Scalar(2), Scalar(3), 2);
    CHECK(((c1 == Scalar(-4) && c2 == Scalar(-9)) || (c1 == Scalar(-9) && c2 == Scalar(-4))));
    // j off the line of i
    CHECK_THROWS(ad_square_spectrum(sys, 1, Scalar(1), Scalar(1), 3));

    Rng rng(47);
    for (int t = 0; t < 50; ++t) {
        int i = 1 + static_cast<int>(rng() % 7);
        const auto& line = sys.component(i).line;
        int j = (line[2] == i) ? line[1] : line[2];
        Scalar a(random_rational(rng)), b(random_rational(rng));
        auto [l1, l2] = ad_square_spectrum(sys, i, a, b, j);
        Scalar ea = -(a * a), eb = -(b * b);
        CHECK(((l1 == ea && l2 == eb) || (l1 == eb && l2 == ea)));
    }
}

}  // TEST_SUITE
