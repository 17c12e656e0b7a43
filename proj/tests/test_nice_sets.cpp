#include <doctest.h>

#include <map>
#include <set>

#include "g2c/nice_sets.hpp"
#include "g2c/random_gen.hpp"

using namespace g2c;

namespace {

// Independent oracle: the absorption property evaluated straight from
// the definition, recomputing stars and P-sets on the fly.
bool nice_brute(EdgeSet t) {
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k) {
                if (k == i || k == j || k == star(i, j)) continue;
                if ((t & edge_bit(i, j)) && (t & edge_bit(star(i, j), k))) {
                    EdgeSet p = edge_bit(i, j) | edge_bit(j, k) | edge_bit(k, i) |
                                edge_bit(i, star(j, k)) | edge_bit(j, star(k, i)) |
                                edge_bit(k, star(i, j));
                    if ((t & p) != p) return false;
                }
            }
    return true;
}

}  // namespace

TEST_SUITE("nice_sets") {

TEST_CASE("p_set") {
    EdgeSet p = p_set(1, 2, 3);
    EdgeSet expect = edge_bit(1, 2) | edge_bit(2, 3) | edge_bit(1, 3) | edge_bit(1, 7) |
                     edge_bit(2, 6) | edge_bit(3, 5);
    CHECK(p == expect);
    CHECK_THROWS(p_set(1, 2, 5));
    for (const auto& t : generating_triplets()) CHECK(edge_list(p_set(t[0], t[1], t[2])).size() == 6);
    // collineation equivariance
    Rng rng(3);
    for (int n = 0; n < 40; ++n) {
        const auto& s = random_collineation(rng);
        const auto& t = generating_triplets()[rng() % 28];
        CHECK(act_on_edges(s, p_set(t[0], t[1], t[2])) == p_set(s(t[0]), s(t[1]), s(t[2])));
    }
}

TEST_CASE("is_nice matches the brute-force definition") {
    CHECK(is_nice(0));
    CHECK(is_nice(kFullEdgeSet));
    CHECK(!is_nice(edge_bit(1, 2) | edge_bit(3, 5)));

    Rng rng(7);
    for (int t = 0; t < 20000; ++t) {
        EdgeSet mask = static_cast<EdgeSet>(rng()) & kFullEdgeSet;
        CHECK(is_nice(mask) == nice_brute(mask));
    }
}

TEST_CASE("special sets") {
    CHECK(edge_list(special_set(SpecialSet::Point, {1})).size() == 6);
    CHECK(edge_list(special_set(SpecialSet::Coline, {1})).size() == 3);
    CHECK(special_set(SpecialSet::Coline, {1}) ==
          (edge_bit(2, 5) | edge_bit(3, 6) | edge_bit(4, 7)));
    CHECK(edge_list(special_set(SpecialSet::LineEdges, {1, 2})).size() == 3);
    CHECK(edge_list(special_set(SpecialSet::LineComplement, {1, 2})).size() == 6);
    CHECK(edge_list(special_set(SpecialSet::TripleT, {1, 2, 3})).size() == 10);
    CHECK(edge_list(kFullEdgeSet & ~special_set(SpecialSet::LineComplement, {1, 2})).size() == 15);
    CHECK_THROWS(special_set(SpecialSet::TripleT, {1, 2, 5}));
    CHECK_THROWS(special_set(SpecialSet::Point, {9}));

    // the named families and all their subsets are nice
    for (int i = 1; i <= 7; ++i) {
        EdgeSet pt = special_set(SpecialSet::Point, {i});
        EdgeSet co = special_set(SpecialSet::Coline, {i});
        // every subset: iterate sub-masks
        for (EdgeSet sub = pt;; sub = (sub - 1) & pt) {
            CHECK(is_nice(sub));
            if (sub == 0) break;
        }
        for (EdgeSet sub = co;; sub = (sub - 1) & co) {
            CHECK(is_nice(sub));
            if (sub == 0) break;
        }
    }
    for (const auto& line : fano_lines()) {
        EdgeSet xl = special_set(SpecialSet::LineEdges, {line[0], line[1]});
        EdgeSet xlc = special_set(SpecialSet::LineComplement, {line[0], line[1]});
        for (EdgeSet sub = xl;; sub = (sub - 1) & xl) {
            CHECK(is_nice(sub));
            if (sub == 0) break;
        }
        for (EdgeSet sub = xlc;; sub = (sub - 1) & xlc) {
            CHECK(is_nice(sub));
            if (sub == 0) break;
        }
        CHECK(is_nice(kFullEdgeSet & ~xlc));
    }
    for (const auto& t : generating_triplets()) {
        CHECK(is_nice(p_set(t[0], t[1], t[2])));
        CHECK(is_nice(special_set(SpecialSet::TripleT, {t[0], t[1], t[2]})));
    }
}

TEST_CASE("enumeration and classification") {
    auto all = enumerate_all_nice();
    CHECK(all.size() == 779);
    for (EdgeSet t : all) CHECK(is_nice(t));

    // parallel scan agrees
    auto all4 = enumerate_all_nice(4);
    std::set<EdgeSet> s1(all.begin(), all.end()), s2(all4.begin(), all4.end());
    CHECK(s1 == s2);

    // cardinality histogram only touches the published sizes
    std::map<int, int> hist;
    for (EdgeSet t : all) ++hist[static_cast<int>(edge_list(t).size())];
    std::set<int> sizes;
    for (auto [k, v] : hist) sizes.insert(k);
    CHECK(sizes == std::set<int>{0, 1, 2, 3, 4, 5, 6, 10, 15, 21});

    auto classes = classify_orbits(all);
    CHECK(classes.size() == 24);
    long total = 0;
    for (const auto& c : classes) {
        CHECK(c.orbit_size * c.stabilizer_order == 168);
        total += c.orbit_size;
        // every orbit member is nice and has the advertised cardinality
        for (EdgeSet m : c.orbit) CHECK(edge_list(m).size() == edge_list(c.representative).size());
    }
    CHECK(total == 779);

    // nice sets with more than 6 edges contain some P-set
    for (EdgeSet t : all) {
        if (edge_list(t).size() <= 6) continue;
        bool has_p = false;
        for (const auto& g : generating_triplets())
            if ((t & p_set(g[0], g[1], g[2])) == p_set(g[0], g[1], g[2])) has_p = true;
        CHECK(has_p);
    }
}

TEST_CASE("supports of admissible maps are nice") {
    // filtering arbitrary edge assignments through the membership test
    // only ever leaves nice supports
    Rng rng(71);
    int admissible_seen = 0;
    for (int t = 0; t < 20000; ++t) {
        EdgeSet mask = static_cast<EdgeSet>(rng()) & kFullEdgeSet;
        AdmissibleMap eta = random_edge_values(rng, mask);
        if (in_A(eta)) {
            ++admissible_seen;
            CHECK(is_nice(eta.support()));
        }
    }
    CHECK(admissible_seen > 0);
}

TEST_CASE("is_nice is collineation invariant") {
    Rng rng(19);
    for (int t = 0; t < 2000; ++t) {
        EdgeSet mask = static_cast<EdgeSet>(rng()) & kFullEdgeSet;
        const auto& s = random_collineation(rng);
        CHECK(is_nice(mask) == is_nice(act_on_edges(s, mask)));
    }
}

TEST_CASE("canonical representatives") {
    CHECK(canonical_rep(class_representative(21)).first == 21);
    CHECK(canonical_rep(class_representative(21)).second == Collineation());
    CHECK_THROWS(canonical_rep(edge_bit(1, 2) | edge_bit(3, 5)));  // not nice

    // the two non-collinear 3-edge pencils through a point
    EdgeSet t8 = edge_bit(1, 2) | edge_bit(1, 3) | edge_bit(1, 4);
    EdgeSet t10 = edge_bit(1, 2) | edge_bit(1, 3) | edge_bit(1, 7);
    CHECK(canonical_rep(t8).first == 8);
    CHECK(canonical_rep(t10).first == 10);

    Rng rng(23);
    for (int n = 0; n < 100; ++n) {
        int id = 1 + static_cast<int>(rng() % 24);
        const auto& s = random_collineation(rng);
        EdgeSet moved = act_on_edges(s, class_representative(id));
        auto [found, witness] = canonical_rep(moved);
        CHECK(found == id);
        CHECK(act_on_edges(witness, class_representative(id)) == moved);
    }
}

}  // TEST_SUITE
