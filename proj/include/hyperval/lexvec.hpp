#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

#include "hyperval/errors.hpp"

namespace hyperval {

/// Element of (Z^n, <=_lex), the value group of a rank-n valuation.
///
/// Coordinate 0 is the most significant one and belongs to the outermost
/// Laurent variable t_n, so that v(t_i) = basis_elem(n, i) holds globally.
class LexVec {
public:
    LexVec() = default;
    explicit LexVec(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}

    static LexVec zero(int rank) { return LexVec(std::vector<std::int64_t>(static_cast<size_t>(rank), 0)); }

    int rank() const { return static_cast<int>(c_.size()); }
    std::int64_t operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    std::int64_t& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<std::int64_t>& coords() const { return c_; }

    bool is_zero() const {
        for (auto x : c_)
            if (x != 0) return false;
        return true;
    }

    /// Last coordinate; this is what the parity map reads.
    std::int64_t last() const {
        require(!c_.empty(), errc::index_out_of_range, "last() on rank-0 vector");
        return c_.back();
    }

    bool all_even() const {
        for (auto x : c_)
            if (x % 2 != 0) return false;
        return true;
    }

    LexVec operator+(const LexVec& o) const {
        check_rank(o);
        LexVec r(*this);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }
    LexVec operator-(const LexVec& o) const {
        check_rank(o);
        LexVec r(*this);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        return r;
    }
    LexVec operator-() const {
        LexVec r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    LexVec operator*(std::int64_t k) const {
        LexVec r(*this);
        for (auto& x : r.c_) x *= k;
        return r;
    }

    friend std::strong_ordering operator<=>(const LexVec& a, const LexVec& b) {
        a.check_rank(b);
        return a.c_ <=> b.c_;
    }
    friend bool operator==(const LexVec& a, const LexVec& b) {
        a.check_rank(b);
        return a.c_ == b.c_;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    void check_rank(const LexVec& o) const {
        require(c_.size() == o.c_.size(), errc::rank_mismatch, "LexVec rank mismatch");
    }

    std::vector<std::int64_t> c_;
};

inline int cmp_lex(const LexVec& a, const LexVec& b) {
    auto o = a <=> b;
    return o < 0 ? -1 : (o > 0 ? 1 : 0);
}

/// Projection on the first d (most significant) components; order-preserving.
inline LexVec proj_head(const LexVec& a, int d) {
    require(d >= 0 && d <= a.rank(), errc::index_out_of_range, "proj_head: d out of range");
    return LexVec(std::vector<std::int64_t>(a.coords().begin(), a.coords().begin() + d));
}

/// Projection on the last d components; a group homomorphism but not
/// order-preserving for d < rank.
inline LexVec proj_tail(const LexVec& a, int d) {
    require(d >= 0 && d <= a.rank(), errc::index_out_of_range, "proj_tail: d out of range");
    return LexVec(std::vector<std::int64_t>(a.coords().end() - d, a.coords().end()));
}

/// e_i^n: 1 in position n+1-i (1-based), zeros elsewhere. e_1^n is the
/// minimal positive element of Z^n.
inline LexVec basis_elem(int n, int i) {
    require(i >= 1 && i <= n, errc::index_out_of_range, "basis_elem: index out of range");
    LexVec r = LexVec::zero(n);
    r[n - i] = 1;
    return r;
}

} // namespace hyperval
