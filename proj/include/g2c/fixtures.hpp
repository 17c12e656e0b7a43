#pragma once

#include <string>
#include <vector>

#include "g2c/algebra.hpp"
#include "g2c/contractions.hpp"

namespace g2c {

/// Three small Z_2^2-graded contraction fixtures, embedded into Z_2^3 as
/// the subgroup {(a,b,0)}: h0 -> 0, h1 -> 1, h2 -> 5, h3 -> 2.
/// Each fixture carries two contraction maps, an explicit linear map
/// between the contracted algebras, and the facts it is expected to
/// witness; verify() checks everything mechanically.
struct Fixture {
    std::string name;
    GradedLieAlgebra base;
    ContractionMap eps1, eps2;
    Matrix iso;  // map contract(base, eps1) -> contract(base, eps2)
    bool iso_is_graded = false;  // preserves components without permuting

    struct Facts {
        bool iso_preserves_brackets = false;
        bool first_2step_nilpotent = false;
        // center membership of the distinguished component in each algebra
        bool comp_central_in_first = false;
        bool comp_central_in_second = false;
        int distinguished_grade = 0;
    } facts;

    std::vector<std::string> verify() const;  // list of failures, empty = ok
};

std::vector<Fixture> fixture_examples();

}  // namespace g2c
