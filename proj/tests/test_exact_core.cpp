#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrt/linalg.hpp"
#include "lrt/rational.hpp"

using namespace lrt;

TEST_CASE("rational parse and print round trip") {
    CHECK(rat_to_string(rat_from_string("3/6")) == "1/2");
    CHECK(rat_to_string(rat_from_string("-4/2")) == "-2");
    CHECK(rat_to_string(rat_from_string("0")) == "0");
    CHECK(rat_to_string(rat_from_string("7")) == "7");
    CHECK(rat_from_string("2/4") == Rat(1, 2));
    CHECK(rat_from_string("-1/3") + rat_from_string("1/3") == 0);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    // (1/3 + 1/6) * 2 == 1 exactly
    Rat r = (Rat(1, 3) + Rat(1, 6)) * 2;
    CHECK(r == 1);
    // Large exact cancellation
    Rat big = Rat(Int("123456789123456789"), Int("987654321"));
    CHECK(big - big == 0);
    CHECK(big / big == 1);
}

TEST_CASE("rank on known matrices") {
    CHECK(rank(Matrix::identity(2)) == 2);
    Matrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    CHECK(rank(m) == 1);
    CHECK(rank(Matrix(3, 3)) == 0);
}

TEST_CASE("kernel of [[1,1]]") {
    Matrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -1);
    CHECK(k[0][1] == 1);
}

TEST_CASE("solve 2x = 1") {
    Matrix m(1, 1);
    m.at(0, 0) = 2;
    auto x = solve(m, Vec{Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1, 2));
}

TEST_CASE("solve detects inconsistency") {
    Matrix m(2, 1);
    m.at(0, 0) = 1;
    m.at(1, 0) = 1;
    auto x = solve(m, Vec{Rat(1), Rat(2)});
    CHECK(!x.has_value());
}

TEST_CASE("rank-nullity on seeded random matrices") {
    std::mt19937_64 rng(20240817u);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 1 + rng() % 5;
        const std::size_t cols = 1 + rng() % 5;
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3,
                                 1 + static_cast<long>(rng() % 3));
            }
        }
        const std::size_t r = rank(m);
        const auto k = kernel(m);
        CHECK(r + k.size() == cols);
        for (const Vec& v : k) CHECK(vec_is_zero(m.apply(v)));
    }
}

TEST_CASE("subspace operations") {
    // span{(1,0,0),(0,1,0)} and span{(0,1,0),(0,0,1)} intersect in span{(0,1,0)}
    Vec e1{Rat(1), Rat(0), Rat(0)};
    Vec e2{Rat(0), Rat(1), Rat(0)};
    Vec e3{Rat(0), Rat(0), Rat(1)};
    auto s1 = Subspace::span({e1, e2}, 3);
    auto s2 = Subspace::span({e2, e3}, 3);
    auto inter = s1.intersect(s2);
    CHECK(inter.dim() == 1);
    CHECK(inter.contains(e2));
    CHECK(!inter.contains(e1));
    auto total = s1.sum(s2);
    CHECK(total.dim() == 3);
    CHECK(s1.contains(vec_add(e1, vec_scale(Rat(5), e2))));
    CHECK(!s1.contains(e3));
    CHECK(total.contains(s1));
    CHECK(!s1.contains(total));
}

TEST_CASE("preimage and image") {
    // a maps (x,y) -> (x+y, 0); preimage of span{(1,0),(0,1)} is everything,
    // preimage of {0} is the diagonal-kernel.
    Matrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    auto zero = Subspace::span({}, 2);
    auto pre = zero.preimage_under(a);
    CHECK(pre.dim() == 1);
    CHECK(pre.contains(Vec{Rat(1), Rat(-1)}));
    auto img = Subspace::full(2).image_under(a);
    CHECK(img.dim() == 1);
    CHECK(img.contains(Vec{Rat(1), Rat(0)}));
}

TEST_CASE("subquotient dimensions and coordinates") {
    Vec e1{Rat(1), Rat(0), Rat(0)};
    Vec e2{Rat(0), Rat(1), Rat(0)};
    auto z = Subspace::span({e1, e2}, 3);
    auto b = Subspace::span({e1}, 3);
    auto q = subquotient(z, b);
    CHECK(q.dim() == 1);
    // e2 + 7*e1 should have coordinate 1 on the representative of [e2].
    Vec v = vec_add(e2, vec_scale(Rat(7), e1));
    Vec c = q.coords(v);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == 1);
    // A vector of b has zero coordinates.
    CHECK(vec_is_zero(q.coords(e1)));
}
