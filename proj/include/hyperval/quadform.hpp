#pragma once

#include <utility>
#include <vector>

#include "hyperval/kn.hpp"

namespace hyperval {

/// Diagonal quadratic form <a_1, ..., a_d> over K_n.
struct DiagForm {
    int rank = 0;
    std::vector<KnElem> entries;

    DiagForm(int rank_, std::vector<KnElem> es) : rank(rank_), entries(std::move(es)) {
        for (const auto& e : entries) {
            require(!e.is_zero(), errc::zero_input, "diagonal form entry must be nonzero");
            require(e.rank() == rank, errc::rank_mismatch, "diagonal form entry rank mismatch");
        }
    }

    size_t dim() const { return entries.size(); }
};

/// Residue-form decomposition along the t_n-adic valuation: each entry is
/// scaled by a square to t_n-exponent 0 or 1, split by parity, and reduced.
/// Both returned forms live over K_{n-1}; either may be empty.
inline std::pair<std::vector<KnElem>, std::vector<KnElem>> springer_split(const DiagForm& phi) {
    require(phi.rank >= 1, errc::rank_mismatch, "springer_split needs rank >= 1");
    std::vector<KnElem> even, odd;
    for (const auto& e : phi.entries) {
        std::int64_t k = e.val0();
        LexVec shift = LexVec::zero(phi.rank);
        shift[0] = -(k - (((k % 2) + 2) % 2));
        KnElem u = e * KnElem::t_monomial(phi.rank, shift); // t_n-exponent 0 or 1
        if (((k % 2) + 2) % 2 == 0) {
            even.push_back(u.residue());
        } else {
            LexVec one = LexVec::zero(phi.rank);
            one[0] = -1;
            odd.push_back((u * KnElem::t_monomial(phi.rank, one)).residue());
        }
    }
    return {even, odd};
}

/// Isotropy over K_n via recursive Springer decomposition; the base case is
/// sign counting over the real closed residue field.
inline bool is_isotropic(const DiagForm& phi) {
    if (phi.dim() < 2) return false;
    if (phi.rank == 0) {
        bool pos = false, neg = false;
        for (const auto& e : phi.entries) {
            int s = e.scalar_value().sign();
            (s > 0 ? pos : neg) = true;
        }
        return pos && neg;
    }
    auto [even, odd] = springer_split(phi);
    return (even.size() >= 2 && is_isotropic(DiagForm(phi.rank - 1, even))) ||
           (odd.size() >= 2 && is_isotropic(DiagForm(phi.rank - 1, odd)));
}

/// Membership in S_k(K_n): x is a sum of k squares iff k x <1> represents x,
/// iff the form k x <1> _|_ <-x> is isotropic (k x <1> is anisotropic over
/// the real field K_n).
inline bool is_sum_of_k_squares(const KnElem& x, int k) {
    require(!x.is_zero(), errc::zero_input, "is_sum_of_k_squares of zero");
    require(k >= 1, errc::index_out_of_range, "is_sum_of_k_squares needs k >= 1");
    if (x.is_square_model()) return true;
    std::vector<KnElem> es(static_cast<size_t>(k), KnElem::from_int(x.rank(), 1));
    es.push_back(-x);
    return is_isotropic(DiagForm(x.rank(), es));
}

} // namespace hyperval
