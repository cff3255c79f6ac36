#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hyperval/quadform.hpp"

using namespace hyperval;
using namespace hyperval::testing;

namespace {

DiagForm form1(std::vector<long> diag) {
    std::vector<KnElem> es;
    for (long v : diag) es.push_back(kn_int(1, v));
    return DiagForm(1, std::move(es));
}

} // namespace

TEST_CASE("springer_split") {
    KnElem t = t_var(1, 1);
    {
        DiagForm phi(1, {kn_int(1, 1), -t});
        auto [even, odd] = springer_split(phi);
        REQUIRE(even.size() == 1);
        REQUIRE(odd.size() == 1);
        CHECK(even[0] == kn_int(0, 1));
        CHECK(odd[0] == kn_int(0, -1));
    }
    {
        DiagForm phi(1, {kn_int(1, 1), kn_int(1, 1), -t});
        auto [even, odd] = springer_split(phi);
        CHECK(even.size() == 2);
        REQUIRE(odd.size() == 1);
        CHECK(odd[0] == kn_int(0, -1));
    }
    {
        DiagForm phi(1, {t.pow(2), -t.pow(3)});
        auto [even, odd] = springer_split(phi);
        REQUIRE(even.size() == 1);
        REQUIRE(odd.size() == 1);
        CHECK(even[0] == kn_int(0, 1));
        CHECK(odd[0] == kn_int(0, -1));
    }
}

TEST_CASE("isotropy base cases and examples") {
    CHECK(is_isotropic(form1({1, -1})));
    CHECK_FALSE(is_isotropic(form1({1, 1})));
    CHECK_FALSE(is_isotropic(DiagForm(0, {kn_int(0, 1), kn_int(0, 1)})));
    CHECK(is_isotropic(DiagForm(0, {kn_int(0, 1), kn_int(0, -2)})));

    KnElem t = t_var(1, 1);
    // <1,1,-t>: residue forms <1,1> and <-1>, both anisotropic over R
    CHECK_FALSE(is_isotropic(DiagForm(1, {kn_int(1, 1), kn_int(1, 1), -t})));
    // <1,1,1,-(1+t)>: residue form <1,1,1,-1> isotropic over R
    CHECK(is_isotropic(DiagForm(1, {kn_int(1, 1), kn_int(1, 1), kn_int(1, 1), -(kn_int(1, 1) + t)})));
}

TEST_CASE("is_sum_of_k_squares") {
    KnElem t = t_var(1, 1);
    CHECK_FALSE(is_sum_of_k_squares(t, 2));
    CHECK(is_sum_of_k_squares(kn_int(1, 1) + t.pow(2), 2));
    for (int k = 1; k <= 8; ++k) CHECK_FALSE(is_sum_of_k_squares(kn_int(1, -1), k));
    CHECK_THROWS_AS(is_sum_of_k_squares(t, 0), error);
    CHECK_THROWS_AS(is_sum_of_k_squares(KnElem(1), 2), error);
}

TEST_CASE("isotropy is invariant under square scaling and permutation") {
    std::mt19937 rng(606);
    for (int n = 1; n <= 2; ++n) {
        for (int iter = 0; iter < 40; ++iter) {
            std::vector<KnElem> es;
            int dim = 2 + static_cast<int>(rng() % 3);
            for (int i = 0; i < dim; ++i) es.push_back(random_kn_nonzero(rng, n, 2, 2));
            DiagForm phi(n, es);
            bool iso = is_isotropic(phi);

            auto scaled = es;
            KnElem c = random_kn_nonzero(rng, n, 2, 2);
            scaled[rng() % scaled.size()] *= c * c;
            CHECK(is_isotropic(DiagForm(n, scaled)) == iso);

            auto perm = es;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(is_isotropic(DiagForm(n, perm)) == iso);
        }
    }
}

TEST_CASE("hyperbolic planes make forms isotropic") {
    std::mt19937 rng(505);
    for (int n = 1; n <= 2; ++n) {
        for (int iter = 0; iter < 40; ++iter) {
            std::vector<KnElem> es;
            int dim = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < dim; ++i) es.push_back(random_kn_nonzero(rng, n, 2, 2));
            KnElem a = random_kn_nonzero(rng, n, 2, 2);
            es.push_back(a);
            es.push_back(-a);
            CHECK(is_isotropic(DiagForm(n, es)));
        }
    }
}

TEST_CASE("level of K_n is infinite") {
    for (int n = 0; n <= 3; ++n) {
        for (int k = 1; k <= 6; ++k) {
            CHECK_FALSE(is_sum_of_k_squares(kn_int(n, -1), k));
        }
    }
}
