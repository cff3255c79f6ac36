#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyperval/lexvec.hpp"

using namespace hyperval;

namespace {
LexVec lv(std::vector<std::int64_t> v) { return LexVec(std::move(v)); }

LexVec random_vec(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<std::int64_t> d(-6, 6);
    std::vector<std::int64_t> c(static_cast<size_t>(rank));
    for (auto& x : c) x = d(rng);
    return LexVec(std::move(c));
}
} // namespace

TEST_CASE("cmp_lex basics") {
    CHECK(cmp_lex(lv({0, 5}), lv({1, 0})) == -1);
    CHECK(cmp_lex(lv({2, 3}), lv({2, 3})) == 0);
    CHECK(cmp_lex(lv({1, -7}), lv({1, 0})) == -1);
    CHECK_THROWS_AS(cmp_lex(lv({1}), lv({1, 2})), error);
}

TEST_CASE("projections") {
    CHECK(proj_head(lv({2, 3}), 1) == lv({2}));
    CHECK(proj_head(lv({2, 3}), 0) == lv({}));
    CHECK(proj_head(lv({1, 2, 3}), 2) == lv({1, 2}));
    CHECK(proj_tail(lv({2, 3}), 1) == lv({3}));
    CHECK(proj_tail(lv({0, 1}), 1) == lv({1}));
    CHECK(proj_tail(lv({1, 2, 3}), 2) == lv({2, 3}));
    CHECK_THROWS_AS(proj_head(lv({1}), 2), error);
    CHECK_THROWS_AS(proj_tail(lv({1}), -1), error);
}

TEST_CASE("basis elements") {
    CHECK(basis_elem(2, 1) == lv({0, 1}));
    CHECK(basis_elem(2, 2) == lv({1, 0}));
    CHECK(basis_elem(1, 1) == lv({1}));
    CHECK_THROWS_AS(basis_elem(2, 3), error);
}

TEST_CASE("translation invariance and projection homomorphisms") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 300; ++iter) {
        int rank = 1 + static_cast<int>(rng() % 4);
        LexVec a = random_vec(rng, rank), b = random_vec(rng, rank), c = random_vec(rng, rank);
        if (a < b) CHECK(a + c < b + c);
        int d = static_cast<int>(rng() % static_cast<unsigned>(rank + 1));
        CHECK(proj_head(a + b, d) == proj_head(a, d) + proj_head(b, d));
        CHECK(proj_tail(a + b, d) == proj_tail(a, d) + proj_tail(b, d));
        if (a <= b) CHECK(proj_head(a, d) <= proj_head(b, d));
    }
}

TEST_CASE("minimal positive element") {
    // no x with 0 < x < e_1^n exists: e_1^n is (0,...,0,1) and any smaller
    // positive vector would need a negative trailing coordinate
    LexVec e1 = basis_elem(3, 1);
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        LexVec x = random_vec(rng, 3);
        bool strictly_between = LexVec::zero(3) < x && x < e1;
        CHECK_FALSE(strictly_between);
    }
}

TEST_CASE("parity is coordinate-wise") {
    CHECK(lv({2, -4, 0}).all_even());
    CHECK_FALSE(lv({2, -3, 0}).all_even());
}
