#include <doctest.h>

#include "g2c/linalg.hpp"
#include "g2c/random_gen.hpp"

using namespace g2c;

namespace {
Matrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<Vec> v;
    for (const auto& r : rows) {
        Vec row;
        for (long x : r) row.push_back(Scalar(x));
        v.push_back(row);
    }
    return Matrix::from_rows(v);
}
}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref basics") {
    auto id = rref(Matrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.reduced == Matrix::identity(3));

    auto zero = rref(Matrix(2, 2));
    CHECK(zero.rank == 0);
    CHECK(zero.reduced == Matrix(2, 2));

    auto r = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == mat({{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        Matrix m(4, 6);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = random_scalar(rng);
        Matrix once = rref(m).reduced;
        CHECK(rref(once).reduced == once);
    }
}

TEST_CASE("kernel") {
    CHECK(kernel(Matrix::identity(4)).is_zero());
    CHECK(kernel(Matrix(2, 3)).dim() == 3);

    Subspace k = kernel(mat({{1, 1, 0}}));
    CHECK(k.dim() == 2);
    CHECK(k.contains(Vec{Scalar(1), Scalar(-1), Scalar(0)}));
    CHECK(!k.contains(Vec{Scalar(1), Scalar(1), Scalar(0)}));
}

TEST_CASE("span_closure") {
    CHECK(span_closure({}).dim() == 0);
    Vec v{Scalar(1), Scalar(2)};
    CHECK(span_closure({v, v, v}).dim() == 1);
    CHECK(span_closure({{Scalar(1), Scalar(0)}, {Scalar(1), Scalar(1)}}).dim() == 2);
    CHECK_THROWS(span_closure({{Scalar(1)}, {Scalar(1), Scalar(2)}}));
}

TEST_CASE("rank-nullity over random matrices") {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng);
        CHECK(rref(m).rank + kernel(m).dim() == cols);
    }
}

TEST_CASE("subspace canonical equality") {
    // span of own basis returns an equal subspace
    Rng rng(37);
    for (int t = 0; t < 20; ++t) {
        std::vector<Vec> vecs;
        for (int v = 0; v < 3; ++v) {
            Vec x(4);
            for (auto& c : x) c = random_scalar(rng);
            vecs.push_back(x);
        }
        Subspace s = span_closure(vecs);
        CHECK(Subspace::span(4, s.basis()) == s);
        // scaled generators span the same canonical subspace
        std::vector<Vec> scaled;
        for (auto x : vecs) {
            Scalar f = random_scalar(rng, true);
            for (auto& c : x) c = c * f;
            scaled.push_back(x);
        }
        CHECK(span_closure(scaled) == s);
    }
}

TEST_CASE("solve") {
    Matrix a = mat({{1, 2}, {3, 4}});
    auto x = solve(a, Vec{Scalar(5), Scalar(11)});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == Vec{Scalar(5), Scalar(11)});
    // inconsistent system
    CHECK(!solve(mat({{1, 1}, {2, 2}}), Vec{Scalar(1), Scalar(3)}).has_value());
}

}  // TEST_SUITE
