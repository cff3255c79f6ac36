#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperval/errors.hpp"

namespace hyperval {

namespace detail {

inline bool mpq_is_square(const mpq_class& x, mpq_class& root) {
    if (sgn(x) < 0) return false;
    if (sgn(x) == 0) {
        root = 0;
        return true;
    }
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = mpq_class(rn, rd);
    root.canonicalize();
    return true;
}

} // namespace detail

/// Description of the coefficient tower Q(sqrt(d_1), ..., sqrt(d_k)).
///
/// Each generator d_i is a positive rational that is not a square in the
/// tower below it, and sqrt(d_i) denotes the positive real root. Towers grow
/// append-only, so a shorter tower embeds into a longer one by zero-padding
/// coordinates.
class Tower {
public:
    static std::shared_ptr<const Tower> rationals() {
        static std::shared_ptr<const Tower> q = std::make_shared<Tower>();
        return q;
    }

    Tower() = default;
    explicit Tower(std::vector<mpq_class> gens) : gens_(std::move(gens)) {}

    int depth() const { return static_cast<int>(gens_.size()); }
    size_t basis_size() const { return size_t{1} << gens_.size(); }
    const mpq_class& gen(int i) const { return gens_[static_cast<size_t>(i)]; }
    const std::vector<mpq_class>& gens() const { return gens_; }

    bool is_prefix_of(const Tower& o) const {
        if (gens_.size() > o.gens_.size()) return false;
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] != o.gens_[i]) return false;
        return true;
    }

private:
    std::vector<mpq_class> gens_;
};

/// Exact element of the scalar tower, stored as a coordinate vector over the
/// 2^k products of tower generators. Models the hereditarily euclidean
/// residue field: sign() is exact and +1 exactly on the nonzero squares of
/// the modeled field.
class Scalar {
public:
    Scalar() : tw_(Tower::rationals()), c_(1, mpq_class(0)) {}
    Scalar(long v) : tw_(Tower::rationals()), c_(1, mpq_class(v)) {}
    Scalar(const mpq_class& v) : tw_(Tower::rationals()), c_(1, v) {}
    Scalar(std::shared_ptr<const Tower> tw, std::vector<mpq_class> coeffs)
        : tw_(std::move(tw)), c_(std::move(coeffs)) {
        require(c_.size() == tw_->basis_size(), errc::internal, "Scalar coefficient size mismatch");
    }

    static Scalar tower_gen(const std::shared_ptr<const Tower>& tw, int i) {
        std::vector<mpq_class> c(tw->basis_size(), mpq_class(0));
        c[size_t{1} << i] = 1;
        return Scalar(tw, std::move(c));
    }

    const std::shared_ptr<const Tower>& tower() const { return tw_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    const mpq_class& rational_part() const { return c_[0]; }

    Scalar promoted(const std::shared_ptr<const Tower>& tw) const {
        if (tw.get() == tw_.get() || tw->gens() == tw_->gens()) return Scalar(tw, c_);
        require(tw_->is_prefix_of(*tw), errc::internal, "Scalar tower not embeddable");
        std::vector<mpq_class> c(tw->basis_size(), mpq_class(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
        return Scalar(tw, std::move(c));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        auto [x, y] = Scalar::aligned(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        auto [x, y] = Scalar::aligned(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    Scalar operator-() const {
        Scalar r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        auto [x, y] = Scalar::aligned(a, b);
        std::vector<mpq_class> out(x.c_.size(), mpq_class(0));
        mul_rec(x.tw_, x.c_.data(), y.c_.data(), out.data(), x.tw_->depth());
        return Scalar(x.tw_, std::move(out));
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        require(!is_zero(), errc::division_by_zero, "Scalar division by zero");
        std::vector<mpq_class> out(c_.size());
        inv_rec(tw_, c_.data(), out.data(), tw_->depth());
        return Scalar(tw_, std::move(out));
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        auto [x, y] = Scalar::aligned(a, b);
        return x.c_ == y.c_;
    }

    /// Exact sign under the real embedding of the tower.
    int sign() const { return sign_rec(tw_, c_.data(), tw_->depth()); }

    /// Square root inside the current tower, or nullopt if none exists
    /// there. The result is the non-negative root.
    std::optional<Scalar> try_sqrt() const {
        int s = sign();
        require(s >= 0, errc::negative_input, "try_sqrt of a negative scalar");
        if (s == 0) return Scalar(tw_, std::vector<mpq_class>(c_.size(), mpq_class(0)));
        auto r = sqrt_rec(tw_, c_, tw_->depth());
        if (!r) return std::nullopt;
        Scalar y(tw_, std::move(*r));
        if (y.sign() < 0) y = -y;
        return y;
    }

    std::string str() const;

private:
    static std::pair<Scalar, Scalar> aligned(const Scalar& a, const Scalar& b) {
        if (a.tw_.get() == b.tw_.get()) return {a, b};
        if (a.tw_->gens() == b.tw_->gens()) return {a, Scalar(a.tw_, b.c_)};
        if (a.tw_->is_prefix_of(*b.tw_)) return {a.promoted(b.tw_), b};
        if (b.tw_->is_prefix_of(*a.tw_)) return {a, b.promoted(a.tw_)};
        fail(errc::internal, "incompatible scalar towers");
    }

    // Arithmetic on coefficient spans of length 2^k, recursing on the top
    // generator: (a + b*sqrt(d)) with a, b in the depth-(k-1) subtower.
    static void mul_rec(const std::shared_ptr<const Tower>& tw, const mpq_class* a, const mpq_class* b,
                        mpq_class* out, int k) {
        if (k == 0) {
            out[0] += a[0] * b[0];
            return;
        }
        size_t h = size_t{1} << (k - 1);
        const mpq_class& d = tw->gen(k - 1);
        // low part: a_lo*b_lo + d * a_hi*b_hi
        std::vector<mpq_class> tmp(h, mpq_class(0));
        mul_rec(tw, a, b, out, k - 1);
        mul_rec(tw, a + h, b + h, tmp.data(), k - 1);
        for (size_t i = 0; i < h; ++i) out[i] += d * tmp[i];
        // high part: a_lo*b_hi + a_hi*b_lo
        mul_rec(tw, a, b + h, out + h, k - 1);
        mul_rec(tw, a + h, b, out + h, k - 1);
    }

    static bool span_zero(const mpq_class* a, size_t n) {
        for (size_t i = 0; i < n; ++i)
            if (sgn(a[i]) != 0) return false;
        return true;
    }

    static int sign_rec(const std::shared_ptr<const Tower>& tw, const mpq_class* a, int k) {
        if (k == 0) return sgn(a[0]);
        size_t h = size_t{1} << (k - 1);
        int sa = sign_rec(tw, a, k - 1);
        int sb = sign_rec(tw, a + h, k - 1);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a_lo^2 with d * a_hi^2 one level down
        std::vector<mpq_class> lo2(h, mpq_class(0)), hi2(h, mpq_class(0));
        mul_rec(tw, a, a, lo2.data(), k - 1);
        mul_rec(tw, a + h, a + h, hi2.data(), k - 1);
        const mpq_class& d = tw->gen(k - 1);
        for (size_t i = 0; i < h; ++i) lo2[i] -= d * hi2[i];
        int s = sign_rec(tw, lo2.data(), k - 1);
        return s == 0 ? 0 : s * sa;
    }

    static void inv_rec(const std::shared_ptr<const Tower>& tw, const mpq_class* a, mpq_class* out, int k) {
        if (k == 0) {
            out[0] = 1 / a[0];
            return;
        }
        size_t h = size_t{1} << (k - 1);
        if (span_zero(a + h, h)) {
            inv_rec(tw, a, out, k - 1);
            for (size_t i = 0; i < h; ++i) out[h + i] = 0;
            return;
        }
        // (a - b sqrt(d)) / (a^2 - d b^2)
        std::vector<mpq_class> norm(h, mpq_class(0)), hi2(h, mpq_class(0)), ninv(h);
        mul_rec(tw, a, a, norm.data(), k - 1);
        mul_rec(tw, a + h, a + h, hi2.data(), k - 1);
        const mpq_class& d = tw->gen(k - 1);
        for (size_t i = 0; i < h; ++i) norm[i] -= d * hi2[i];
        inv_rec(tw, norm.data(), ninv.data(), k - 1);
        std::vector<mpq_class> lo(h, mpq_class(0)), hi(h, mpq_class(0));
        mul_rec(tw, a, ninv.data(), lo.data(), k - 1);
        mul_rec(tw, a + h, ninv.data(), hi.data(), k - 1);
        for (size_t i = 0; i < h; ++i) {
            out[i] = lo[i];
            out[h + i] = -hi[i];
        }
    }

    // Square root of x = u + v*sqrt(d) as y = a + b*sqrt(d), if one exists.
    static std::optional<std::vector<mpq_class>> sqrt_rec(const std::shared_ptr<const Tower>& tw,
                                                          const std::vector<mpq_class>& x, int k) {
        if (k == 0) {
            mpq_class r;
            if (!detail::mpq_is_square(x[0], r)) return std::nullopt;
            return std::vector<mpq_class>{r};
        }
        size_t h = size_t{1} << (k - 1);
        std::vector<mpq_class> u(x.begin(), x.begin() + static_cast<long>(h));
        std::vector<mpq_class> v(x.begin() + static_cast<long>(h), x.end());
        const mpq_class& d = tw->gen(k - 1);
        auto sub = [&](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
            std::vector<mpq_class> r(h, mpq_class(0));
            mul_rec(tw, a.data(), b.data(), r.data(), k - 1);
            return r;
        };
        if (span_zero(v.data(), h)) {
            // either sqrt(u) in the subtower, or sqrt(u/d)*sqrt(d)
            if (auto a = sqrt_rec(tw, u, k - 1)) {
                std::vector<mpq_class> out(size_t{2} * h, mpq_class(0));
                for (size_t i = 0; i < h; ++i) out[i] = (*a)[i];
                return out;
            }
            std::vector<mpq_class> ud(u);
            for (auto& q : ud) q /= d;
            if (auto b = sqrt_rec(tw, ud, k - 1)) {
                std::vector<mpq_class> out(size_t{2} * h, mpq_class(0));
                for (size_t i = 0; i < h; ++i) out[h + i] = (*b)[i];
                return out;
            }
            return std::nullopt;
        }
        // need a^2 + d b^2 = u, 2ab = v: a^2 is a root of z^2 - u z + d v^2/4
        std::vector<mpq_class> disc = sub(u, u);
        std::vector<mpq_class> v2 = sub(v, v);
        for (size_t i = 0; i < h; ++i) disc[i] -= d * v2[i];
        auto s = sqrt_rec(tw, disc, k - 1);
        if (!s) return std::nullopt;
        Scalar su(tw, pad(u, tw)), ss(tw, pad(*s, tw));
        for (int attempt = 0; attempt < 2; ++attempt) {
            Scalar cand = (attempt == 0) ? (su + ss) : (su - ss);
            cand = cand * Scalar(mpq_class(1, 2)).promoted(tw);
            // cand should be a^2 in the subtower
            std::vector<mpq_class> cl(cand.coeffs().begin(), cand.coeffs().begin() + static_cast<long>(h));
            if (!span_zero(cand.coeffs().data() + h, h)) continue;
            if (sign_rec(tw, cl.data(), k - 1) < 0) continue;
            auto a = sqrt_rec(tw, cl, k - 1);
            if (!a || span_zero(a->data(), h)) continue;
            // b = v / (2a)
            Scalar sa(tw, pad(*a, tw));
            Scalar sv(tw, pad(v, tw));
            Scalar sb = sv / (Scalar(2).promoted(tw) * sa);
            std::vector<mpq_class> bl(sb.coeffs().begin(), sb.coeffs().begin() + static_cast<long>(h));
            if (!span_zero(sb.coeffs().data() + h, h)) continue;
            std::vector<mpq_class> out(size_t{2} * h, mpq_class(0));
            for (size_t i = 0; i < h; ++i) {
                out[i] = (*a)[i];
                out[h + i] = bl[i];
            }
            // verify exactly
            std::vector<mpq_class> chk(size_t{2} * h, mpq_class(0));
            mul_rec(tw, out.data(), out.data(), chk.data(), k);
            if (chk == x) return out;
        }
        return std::nullopt;
    }

    static std::vector<mpq_class> pad(const std::vector<mpq_class>& half, const std::shared_ptr<const Tower>& tw) {
        std::vector<mpq_class> full(tw->basis_size(), mpq_class(0));
        for (size_t i = 0; i < half.size(); ++i) full[i] = half[i];
        return full;
    }

    std::shared_ptr<const Tower> tw_;
    std::vector<mpq_class> c_;
};

inline std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t mask = 0; mask < c_.size(); ++mask) {
        const mpq_class& q = c_[mask];
        if (sgn(q) == 0) continue;
        mpq_class a = q;
        if (!first) {
            out += (sgn(a) < 0) ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        std::string radical;
        for (int i = 0; i < tw_->depth(); ++i)
            if (mask & (size_t{1} << i)) {
                if (!radical.empty()) radical += "*";
                radical += "sqrt(" + tw_->gen(i).get_str() + ")";
            }
        if (radical.empty())
            out += a.get_str();
        else if (a == 1)
            out += radical;
        else
            out += a.get_str() + "*" + radical;
    }
    return out;
}

} // namespace hyperval
