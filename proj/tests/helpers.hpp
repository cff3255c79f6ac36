#pragma once

#include <random>

#include "hyperval/kn.hpp"

namespace hyperval::testing {

inline KnElem kn_int(int rank, long v) { return KnElem::from_int(rank, v); }

inline KnElem t_var(int rank, int i) { return KnElem::variable(rank, i); }

inline Poly random_poly(std::mt19937& rng, int rank, int max_terms = 3, int max_exp = 2) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<std::int64_t> ex(0, max_exp);
    Poly p(rank);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Poly::Exp e(static_cast<size_t>(rank));
        for (auto& x : e) x = ex(rng);
        long c = coeff(rng);
        if (c == 0) c = 1;
        p = p + Poly::monomial(rank, e, Scalar(c));
    }
    return p;
}

inline KnElem random_kn(std::mt19937& rng, int rank, int max_terms = 3, int max_exp = 2) {
    for (;;) {
        Poly num = random_poly(rng, rank, max_terms, max_exp);
        Poly den = random_poly(rng, rank, max_terms, max_exp);
        if (den.is_zero()) continue;
        return KnElem(num, den);
    }
}

inline KnElem random_kn_nonzero(std::mt19937& rng, int rank, int max_terms = 3, int max_exp = 2) {
    for (;;) {
        KnElem x = random_kn(rng, rank, max_terms, max_exp);
        if (!x.is_zero()) return x;
    }
}

} // namespace hyperval::testing
