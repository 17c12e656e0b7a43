#pragma once

#include <utility>
#include <vector>

#include "g2c/fano.hpp"

namespace g2c {

/// P_{{i,j,k}} for a generating triplet: the six edges
/// {i,j}, {j,k}, {k,i}, {i,j*k}, {j,k*i}, {k,i*j}.
EdgeSet p_set(int i, int j, int k);

/// Absorption property: whenever {i,j} and {i*j,k} lie in T for some
/// generating triplet, all of P_{{i,j,k}} does.
bool is_nice(EdgeSet t);

enum class SpecialSet {
    LineEdges,       // X_L: the three edges inside a line
    LineComplement,  // X_{L^C}: the six edges avoiding a line
    Point,           // X_{(i)}: the six edges through a point
    Coline,          // X^{(i)}: the three edges whose third point is i
    TripleP,         // P_{{i,j,k}}
    TripleT,         // T_{{i,j,k}} = union of four P's
};

/// The families of Definition-style subsets. params: two line points for
/// the line kinds, one point for Point/Coline, a generating triplet for
/// the Triple kinds. Throws on invalid parameters.
EdgeSet special_set(SpecialSet kind, const std::vector<int>& params);

/// All nice subsets of X, by exhaustive scan of the 2^21 subsets.
/// jobs > 1 splits the mask range across threads.
std::vector<EdgeSet> enumerate_all_nice(int jobs = 1);

struct NiceClass {
    int id = 0;                  // 1..24
    EdgeSet representative = 0;  // the published T_id
    int orbit_size = 0;
    int stabilizer_order = 0;
    std::vector<EdgeSet> orbit;
};

/// The published representative T_1..T_24.
EdgeSet class_representative(int id);

/// Partitions the complete nice-set list into its 24 collineation
/// orbits, identified against the published representatives. Throws if
/// the orbit count is not 24 (that would falsify the build).
std::vector<NiceClass> classify_orbits(const std::vector<EdgeSet>& all_nice);

/// Class id of a nice set plus a witnessing collineation sigma with
/// sigma~(T_class) = t. Throws if t is not nice.
std::pair<int, Collineation> canonical_rep(EdgeSet t);

/// Stabilizer order of a subset under the collineation action.
int stabilizer_order(EdgeSet t);

}  // namespace g2c
