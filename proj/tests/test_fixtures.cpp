#include <doctest.h>

#include "g2c/fixtures.hpp"
#include "g2c/invariants.hpp"

using namespace g2c;

TEST_SUITE("fixtures") {

TEST_CASE("all three fixtures verify their stated facts") {
    auto fixtures = fixture_examples();
    REQUIRE(fixtures.size() == 3);
    for (const auto& f : fixtures) {
        INFO(f.name);
        auto failures = f.verify();
        for (const auto& msg : failures) FAIL_CHECK(msg);
        CHECK(failures.empty());
    }
}

TEST_CASE("fixture details") {
    auto fixtures = fixture_examples();

    // so3 + center: both contractions are Lie algebras; the first has
    // [x1,x2] = x3 and nothing else, so its center misses x1
    const auto& f0 = fixtures[0];
    GradedLieAlgebra first = contract(f0.base, f0.eps1);
    CHECK(first.bracket_basis(0, 2) == Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
    CHECK(center(first).dim() == 2);  // x3 and z

    // so3: centers of the two contractions sit in different components
    const auto& f1 = fixtures[1];
    GradedLieAlgebra a = contract(f1.base, f1.eps1);
    GradedLieAlgebra b = contract(f1.base, f1.eps2);
    CHECK(center(a) == a.component_subspace(2));   // <x3>, grade h3 -> 2
    CHECK(center(b) == b.component_subspace(1));   // <x1>, grade h1 -> 1

    // sl2+sl2: eps2 only flips signs, both contractions stay isomorphic
    // to the original semisimple algebra
    const auto& f2 = fixtures[2];
    GradedLieAlgebra s1 = contract(f2.base, f2.eps1);
    GradedLieAlgebra s2 = contract(f2.base, f2.eps2);
    CHECK(s1.same_table(f2.base));
    CHECK(radical(s2).is_zero());
    CHECK(is_bracket_preserving(f2.iso, s1, s2));
    // but no diagonal scaling works: this is exactly what distinguishes
    // strong equivalence from normalization here, checked mechanically
    // over a symbolic-free grid of candidate diagonal maps
    bool diagonal_found = false;
    for (int ax : {-1, 1})
        for (int be : {-2, -1, 1, 2})
            for (int ga : {-2, -1, 1, 2}) {
                Matrix d(6, 6);
                d.at(0, 0) = Scalar(ax);
                d.at(1, 1) = Scalar(ax);
                d.at(2, 2) = Scalar(be);
                d.at(3, 3) = Scalar(be);
                d.at(4, 4) = Scalar(ga);
                d.at(5, 5) = Scalar(ga);
                if (is_bracket_preserving(d, s1, s2)) diagonal_found = true;
            }
    CHECK(!diagonal_found);
}

}  // TEST_SUITE
