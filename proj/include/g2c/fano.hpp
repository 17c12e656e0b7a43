#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace g2c {

/// Index set I = {1..7} of the Fano plane, identified with the nonzero
/// elements of Z_2^3 via g1=(1,0,0), g2=(0,1,0), g3=(0,0,1), g4=(1,1,1),
/// g5=(1,1,0), g6=(1,0,1), g7=(0,1,1).

/// 3-bit encoding of g_i (g1 -> 0b100, ..., index 0 -> 0).
int group_bits(int i);

/// Inverse of group_bits.
int index_of_bits(int bits);

/// Third point of the line through i and j (g_i + g_j = g_{i*j}).
/// Throws if i == j or out of range.
int star(int i, int j);

/// star extended to {0..7} with 0 as the group identity.
int star0(int i, int j);

/// The 7 lines as sorted triples.
const std::vector<std::array<int, 3>>& fano_lines();

/// The 3 lines through a given point.
std::vector<std::array<int, 3>> lines_through(int i);

/// True iff {i,j,k} generates Z_2^3, i.e. is not a line.
/// Throws on non-distinct indices.
bool is_generating_triplet(int i, int j, int k);

/// All 28 generating triplets, each sorted ascending.
const std::vector<std::array<int, 3>>& generating_triplets();

/// A star-preserving permutation of {1..7}.
class Collineation {
public:
    Collineation();  // identity
    explicit Collineation(const std::array<int, 7>& images);  // images[t] = sigma(t+1)

    int operator()(int i) const { return p_[i]; }

    Collineation compose(const Collineation& inner) const;  // this after inner
    Collineation inverse() const;

    bool operator==(const Collineation& o) const { return p_ == o.p_; }
    bool operator!=(const Collineation& o) const { return !(*this == o); }
    bool operator<(const Collineation& o) const { return p_ < o.p_; }

    std::array<int, 7> images() const;
    std::string str() const;

private:
    std::array<int, 8> p_;  // p_[0] unused
};

/// The full collineation group S_*(I), 168 elements, obtained by
/// filtering all 5040 permutations. Cached after the first call.
const std::vector<Collineation>& all_collineations();

/// The unique collineation mapping the ordered generating triplet src
/// onto dst. Throws if either triplet is not generating.
Collineation collineation_from_triplets(const std::array<int, 3>& src, const std::array<int, 3>& dst);

// --- Edges -----------------------------------------------------------
//
// X = the 21 unordered pairs {i,j}, encoded as bit positions 0..20 in
// lexicographic (min,max) order. This bijection is part of the public
// interface: bit 0 = {1,2}, bit 1 = {1,3}, ..., bit 20 = {6,7}.

inline constexpr int kNumEdges = 21;
using EdgeSet = std::uint32_t;
inline constexpr EdgeSet kFullEdgeSet = (1u << kNumEdges) - 1;

int edge_index(int i, int j);
std::pair<int, int> edge_points(int e);
EdgeSet edge_bit(int i, int j);

/// sigma~(T) = { {sigma(i), sigma(j)} : {i,j} in T }.
EdgeSet act_on_edges(const Collineation& sigma, EdgeSet t);

/// Edges of a set in lexicographic order.
std::vector<std::pair<int, int>> edge_list(EdgeSet t);

std::string edge_set_str(EdgeSet t);

}  // namespace g2c
