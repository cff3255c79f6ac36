#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyperval/scalar.hpp"

using namespace hyperval;

namespace {

std::shared_ptr<const Tower> tower(std::initializer_list<long> gens) {
    std::vector<mpq_class> g;
    for (long x : gens) g.emplace_back(x);
    return std::make_shared<Tower>(std::move(g));
}

Scalar random_scalar(std::mt19937& rng, const std::shared_ptr<const Tower>& tw) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<mpq_class> c(tw->basis_size());
    for (auto& q : c) {
        q = mpq_class(num(rng), den(rng));
        q.canonicalize();
    }
    return Scalar(tw, std::move(c));
}

// Interval-refinement sign oracle: bisect an enclosing rational interval of
// each sqrt generator until the sign of the evaluation interval is decided.
// Used only as an independent check of the exact sign computation.
struct Interval {
    mpq_class lo, hi;
};

Interval sqrt_enclosure(const mpq_class& d, int refinements) {
    mpq_class lo(0), hi = d + 1;
    for (int i = 0; i < refinements; ++i) {
        mpq_class mid = (lo + hi) / 2;
        if (mid * mid <= d)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

int interval_sign(const Scalar& x, int refinements) {
    const auto& tw = *x.tower();
    mpq_class lo(0), hi(0);
    bool first = true;
    for (size_t mask = 0; mask < x.coeffs().size(); ++mask) {
        const mpq_class& c = x.coeffs()[mask];
        Interval term{c, c};
        for (int i = 0; i < tw.depth(); ++i) {
            if (!(mask & (size_t{1} << i))) continue;
            Interval s = sqrt_enclosure(tw.gen(i), refinements);
            mpq_class a = term.lo * s.lo, b = term.lo * s.hi, cc = term.hi * s.lo, dd = term.hi * s.hi;
            term.lo = std::min(std::min(a, b), std::min(cc, dd));
            term.hi = std::max(std::max(a, b), std::max(cc, dd));
        }
        if (first) {
            lo = term.lo;
            hi = term.hi;
            first = false;
        } else {
            lo += term.lo;
            hi += term.hi;
        }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0; // undecided at this refinement depth
}

} // namespace

TEST_CASE("rational sign and arithmetic") {
    Scalar a(mpq_class(3, 7));
    CHECK(a.sign() == 1);
    CHECK(Scalar(0).sign() == 0);
    CHECK((-a).sign() == -1);
    CHECK((a - a).is_zero());
    CHECK(a * a.inverse() == Scalar(1));
}

TEST_CASE("sign of 1 - sqrt(2)") {
    auto tw = tower({2});
    Scalar one = Scalar(1).promoted(tw);
    Scalar r2 = Scalar::tower_gen(tw, 0);
    Scalar x = one - r2;
    // frozen from the interval-refinement oracle
    int oracle = interval_sign(x, 40);
    REQUIRE(oracle != 0);
    CHECK(oracle == -1);
    CHECK(x.sign() == -1);
    CHECK(r2.sign() == 1);
    CHECK((r2 * r2) == Scalar(2).promoted(tw));
}

TEST_CASE("sign agrees with interval oracle on random tower elements") {
    auto tw = tower({2, 3});
    std::mt19937 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar x = random_scalar(rng, tw);
        int oracle = interval_sign(x, 60);
        if (oracle == 0) continue; // element is 0 or needs deeper refinement
        CHECK(x.sign() == oracle);
    }
}

TEST_CASE("field axioms hold exactly") {
    auto tw = tower({2, 5});
    std::mt19937 rng(1234);
    for (int iter = 0; iter < 100; ++iter) {
        Scalar a = random_scalar(rng, tw), b = random_scalar(rng, tw), c = random_scalar(rng, tw);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1).promoted(tw));
    }
}

TEST_CASE("sign is multiplicative") {
    auto tw = tower({2, 3});
    std::mt19937 rng(555);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar a = random_scalar(rng, tw), b = random_scalar(rng, tw);
        CHECK(a.sign() * b.sign() == (a * b).sign());
    }
}

TEST_CASE("sums of two squares are positive squares") {
    auto tw = tower({2, 3});
    std::mt19937 rng(77);
    for (int iter = 0; iter < 100; ++iter) {
        Scalar a = random_scalar(rng, tw), b = random_scalar(rng, tw);
        if (a.is_zero() && b.is_zero()) continue;
        Scalar s = a * a + b * b;
        CHECK(s.sign() == 1);
    }
}

TEST_CASE("try_sqrt") {
    CHECK(*Scalar(mpq_class(9, 4)).try_sqrt() == Scalar(mpq_class(3, 2)));
    CHECK_FALSE(Scalar(2).try_sqrt().has_value());
    auto tw = tower({2});
    Scalar two = Scalar(2).promoted(tw);
    auto r = two.try_sqrt();
    REQUIRE(r.has_value());
    CHECK(*r == Scalar::tower_gen(tw, 0));
    CHECK_THROWS_AS(Scalar(-1).try_sqrt(), error);
}

TEST_CASE("try_sqrt recovers |y| for random tower elements") {
    auto tw = tower({2, 3});
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 60; ++iter) {
        Scalar y = random_scalar(rng, tw);
        Scalar sq = y * y;
        auto r = sq.try_sqrt();
        REQUIRE(r.has_value());
        Scalar expect = (y.sign() < 0) ? -y : y;
        CHECK(*r == expect);
    }
}

TEST_CASE("nested radicals: sqrt(3 + 2*sqrt(2)) = 1 + sqrt(2)") {
    auto tw = tower({2});
    Scalar r2 = Scalar::tower_gen(tw, 0);
    Scalar x = Scalar(3).promoted(tw) + Scalar(2).promoted(tw) * r2;
    auto r = x.try_sqrt();
    REQUIRE(r.has_value());
    CHECK(*r == Scalar(1).promoted(tw) + r2);
}
