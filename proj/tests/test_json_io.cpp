#include <doctest.h>

#include <map>

#include "g2c/json_io.hpp"
#include "g2c/random_gen.hpp"

using namespace g2c;

TEST_SUITE("json_io") {

TEST_CASE("eta round-trip") {
    Rng rng(61);
    for (int t = 0; t < 20; ++t) {
        AdmissibleMap eta = random_admissible(rng, class_representative(1 + rng() % 24));
        CHECK(eta_from_json(eta_to_json(eta)) == eta);
    }
    // schema shape
    AdmissibleMap m;
    m.set(1, 2, Scalar(Rational(2, 3), Rational(1, 5)));
    Json j = eta_to_json(m);
    CHECK(j.is_array());
    CHECK(j.size() == 1);
    CHECK(j[0]["edge"] == "1,2");
    CHECK(j[0]["value"] == "2/3+1/5*i");
}

TEST_CASE("g2 table") {
    Json j = g2_table_json();
    CHECK(j["basis"].size() == 14);
    CHECK(j["entries"].size() > 0);
    // deterministic across calls
    CHECK(g2_table_json().dump() == j.dump());
    CHECK(g2_table_csv() == g2_table_csv());
    // every entry respects antisymmetry: (i,j,k,v) implies (j,i,k,-v)
    const auto& L = build_g2().algebra();
    for (const auto& entry : j["entries"]) {
        int a = entry[0], b = entry[1], k = entry[2];
        Scalar v = Scalar::parse(entry[3].get<std::string>());
        Vec back = L.bracket_basis(b, a);
        CHECK(back[k] == -v);
    }
}

TEST_CASE("profile json") {
    auto p = profile(contract(build_g2().algebra(),
                              contraction_from_edges(AdmissibleMap::ones(class_representative(21)))));
    Json j = profile_to_json(p);
    CHECK(j["dim_center"] == 2);
    CHECK(j["dim_derived"] == 8);
    CHECK(j["nilindex"] == 3);
    CHECK(j["is_nilpotent"] == true);
}

TEST_CASE("label json") {
    auto l = equivalence_label(AdmissibleMap::from_values(
        class_representative(14), {Scalar(2), Scalar(3), Scalar(4), Scalar(5)}));
    Json j = label_to_json(l);
    CHECK(j["class"] == 14);
    CHECK(j["params"].size() == 1);
}

TEST_CASE("octonion, matrix and collineation round-trips") {
    Rng rng(67);
    for (int t = 0; t < 10; ++t) {
        Octonion x = random_octonion(rng);
        CHECK(octonion_from_json(octonion_to_json(x)) == x);
        const Collineation& s = random_collineation(rng);
        CHECK(collineation_from_json(collineation_to_json(s)) == s);
    }
    Matrix d = derivation_matrix(Octonion::basis(1), Octonion::basis(2));
    Json j = matrix_to_json(d);
    CHECK(j.size() == 8);
    CHECK(matrix_from_json(j) == d);
}

TEST_CASE("enumeration json carries class data") {
    auto all = enumerate_all_nice();
    auto classes = classify_orbits(all);
    Json j = nice_enumeration_json(all, classes);
    CHECK(j["total"] == 779);
    CHECK(j["sets"].size() == 779);
    long sum = 0;
    std::map<int, int> per_class;
    for (const auto& s : j["sets"]) {
        int id = s["class"];
        ++per_class[id];
        CHECK(s["orbit_size"].get<int>() * s["stabilizer_order"].get<int>() == 168);
        sum += 1;
    }
    CHECK(sum == 779);
    for (const auto& c : classes) CHECK(per_class[c.id] == c.orbit_size);
}

}  // TEST_SUITE
