#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hyperval/poly.hpp"

namespace hyperval {

/// Square class of a nonzero element of K_n: valuation parity plus the sign
/// of the iterated leading coefficient. An element is a square of the
/// modeled field iff parity == 0 and residue_sign == +1.
struct SquareClass {
    LexVec parity;
    int residue_sign = 0;

    bool is_square() const { return parity.is_zero() && residue_sign > 0; }
    bool is_neg_square() const { return parity.is_zero() && residue_sign < 0; }
    bool is_mixed() const { return !parity.is_zero(); }
};

/// Exact element of K_n = R((t_1))...((t_n)), kept as a reduced fraction of
/// polynomials in t_1..t_n. The denominator is normalized so its lex-minimal
/// term has coefficient 1.
class KnElem {
public:
    explicit KnElem(int rank = 0) : num_(rank), den_(Poly::constant(rank, Scalar(1))) {}
    KnElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static KnElem from_scalar(int rank, const Scalar& c) {
        return KnElem(Poly::constant(rank, c), Poly::constant(rank, Scalar(1)));
    }
    static KnElem from_int(int rank, long v) { return from_scalar(rank, Scalar(v)); }
    /// The Laurent variable t_i (1-based; t_n is the outermost).
    static KnElem variable(int rank, int i) {
        require(i >= 1 && i <= rank, errc::index_out_of_range, "variable index out of range");
        return KnElem(Poly::coord_var(rank, rank - i), Poly::constant(rank, Scalar(1)));
    }
    /// Monomial t^e for an integer exponent vector e (possibly negative).
    static KnElem t_monomial(int rank, const LexVec& e) {
        require(e.rank() == rank, errc::rank_mismatch, "t_monomial rank mismatch");
        Poly::Exp pos(static_cast<size_t>(rank), 0), neg(static_cast<size_t>(rank), 0);
        for (int i = 0; i < rank; ++i) {
            if (e[i] >= 0)
                pos[static_cast<size_t>(i)] = e[i];
            else
                neg[static_cast<size_t>(i)] = -e[i];
        }
        return KnElem(Poly::monomial(rank, pos, Scalar(1)), Poly::monomial(rank, neg, Scalar(1)));
    }

    int rank() const { return num_.rank(); }
    bool is_zero() const { return num_.is_zero(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_scalar() const { return num_.is_constant() && den_.is_constant(); }
    Scalar scalar_value() const { return num_.constant_value() / den_.constant_value(); }

    // Fraction arithmetic with cross-gcds so reductions stay on small
    // operands instead of full products.
    friend KnElem operator+(const KnElem& a, const KnElem& b) {
        Poly g = poly_gcd(a.den_, b.den_);
        if (g.is_constant()) return KnElem::reduced_unchecked(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        Poly da = poly_divexact(a.den_, g), db = poly_divexact(b.den_, g);
        Poly num = a.num_ * db + b.num_ * da;
        return KnElem(num, a.den_ * db);
    }
    friend KnElem operator-(const KnElem& a, const KnElem& b) { return a + (-b); }
    KnElem operator-() const {
        KnElem r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend KnElem operator*(const KnElem& a, const KnElem& b) {
        if (a.is_zero() || b.is_zero()) return KnElem(a.rank());
        Poly g1 = poly_gcd(a.num_, b.den_);
        Poly g2 = poly_gcd(b.num_, a.den_);
        Poly num = poly_divexact(a.num_, g1) * poly_divexact(b.num_, g2);
        Poly den = poly_divexact(a.den_, g2) * poly_divexact(b.den_, g1);
        return KnElem::reduced_unchecked(num, den);
    }
    friend KnElem operator/(const KnElem& a, const KnElem& b) {
        require(!b.is_zero(), errc::division_by_zero, "division by zero in K_n");
        if (a.is_zero()) return KnElem(a.rank());
        Poly g1 = poly_gcd(a.num_, b.num_);
        Poly g2 = poly_gcd(b.den_, a.den_);
        Poly num = poly_divexact(a.num_, g1) * poly_divexact(b.den_, g2);
        Poly den = poly_divexact(a.den_, g2) * poly_divexact(b.num_, g1);
        return KnElem::reduced_unchecked(num, den);
    }
    KnElem& operator+=(const KnElem& o) { return *this = *this + o; }
    KnElem& operator-=(const KnElem& o) { return *this = *this - o; }
    KnElem& operator*=(const KnElem& o) { return *this = *this * o; }
    KnElem& operator/=(const KnElem& o) { return *this = *this / o; }

    KnElem pow(std::int64_t k) const {
        if (k < 0) return KnElem::from_int(rank(), 1) / pow(-k);
        KnElem r = KnElem::from_int(rank(), 1);
        KnElem base(*this);
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const KnElem& a, const KnElem& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    LexVec valuation() const {
        require(!is_zero(), errc::zero_input, "valuation of zero");
        return num_.valuation() - den_.valuation();
    }

    /// t_n-adic valuation (first coordinate of the valuation).
    std::int64_t val0() const {
        require(!is_zero(), errc::zero_input, "val0 of zero");
        return num_.min_exp0() - den_.min_exp0();
    }

    /// The unit x / t^{v(x)} of valuation zero.
    KnElem angular() const {
        return *this / t_monomial(rank(), valuation());
    }

    /// Evaluation at t_n = 0; requires val0() >= 0. Result lives in K_{n-1}.
    KnElem residue() const {
        require(!is_zero(), errc::zero_input, "residue of zero");
        std::int64_t a = num_.min_exp0(), b = den_.min_exp0();
        require(a - b >= 0, errc::negative_input, "residue of an element with negative t_n-adic value");
        if (a - b > 0) return KnElem(rank() - 1);
        return KnElem(num_.shifted0(a).residue0(), den_.shifted0(b).residue0());
    }

    /// Iterated leading coefficient: residues of angular parts down to the
    /// scalar level.
    Scalar leading_scalar() const {
        require(!is_zero(), errc::zero_input, "leading_scalar of zero");
        return num_.lead_coeff() / den_.lead_coeff();
    }

    SquareClass square_class() const {
        require(!is_zero(), errc::zero_input, "square_class of zero");
        LexVec v = valuation();
        LexVec par = LexVec::zero(rank());
        for (int i = 0; i < rank(); ++i) par[i] = ((v[i] % 2) + 2) % 2;
        return SquareClass{par, leading_scalar().sign()};
    }

    bool is_square_model() const { return square_class().is_square(); }

    /// Membership in S_2(K_n), decided by the valuation/residue recursion.
    bool is_sum_two_squares() const {
        require(!is_zero(), errc::zero_input, "is_sum_two_squares of zero");
        if (rank() == 0) return scalar_value().sign() > 0;
        std::int64_t k = val0();
        if (k % 2 != 0) return false;
        LexVec e = LexVec::zero(rank());
        e[0] = -k;
        KnElem u = *this * t_monomial(rank(), e);
        return u.residue().is_sum_two_squares();
    }

    /// Sign under the ordering of the modeled field selected by the signs of
    /// the variables: t_signs[i] is the sign (+1/-1) assigned to t_{i+1}.
    int sign_at_ordering(const std::vector<int>& t_signs) const {
        if (is_zero()) return 0;
        require(static_cast<int>(t_signs.size()) == rank(), errc::rank_mismatch, "t_signs rank mismatch");
        LexVec v = valuation();
        int s = leading_scalar().sign();
        for (int i = 0; i < rank(); ++i) {
            if (v[i] % 2 != 0 && t_signs[static_cast<size_t>(rank() - 1 - i)] < 0) s = -s;
        }
        return s;
    }

    std::string str() const {
        if (num_.is_zero()) return "0";
        std::string n = num_.str(rank());
        if (den_.is_constant() && den_.constant_value() == Scalar(1)) return n;
        std::string d = den_.str(rank());
        bool nc = num_.term_count() > 1;
        bool dc = den_.term_count() > 1;
        return (nc ? "(" + n + ")" : n) + "/" + (dc ? "(" + d + ")" : d);
    }

private:
    // already coprime by construction; only unit-normalize
    static KnElem reduced_unchecked(Poly num, Poly den) {
        KnElem r(num.rank());
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        require(!r.den_.is_zero(), errc::division_by_zero, "zero denominator");
        if (r.num_.is_zero()) {
            r.den_ = Poly::constant(r.rank(), Scalar(1));
            return r;
        }
        Scalar lc = r.den_.lead_coeff().inverse();
        r.num_ = r.num_ * lc;
        r.den_ = r.den_ * lc;
        return r;
    }

    void reduce() {
        require(!den_.is_zero(), errc::division_by_zero, "zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(rank(), Scalar(1));
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
        Scalar lc = den_.lead_coeff().inverse();
        num_ = num_ * lc;
        den_ = den_ * lc;
    }

    Poly num_, den_;
};

/// Square root in the rational-function model: succeeds when x is a square
/// of K_n representable with a scalar-tower leading coefficient. `blocked`
/// reports the scalar c such that x = c * square_part^2, so the caller may
/// extend the tower by sqrt(c).
struct KnSqrtResult {
    enum class Status { ok, blocked, not_square } status;
    KnElem root;        // valid when ok
    Scalar pending;     // valid when blocked
    KnElem square_part; // valid when blocked

    bool ok() const { return status == Status::ok; }
    bool is_blocked() const { return status == Status::blocked; }
};

inline KnSqrtResult kn_try_sqrt(const KnElem& x) {
    KnSqrtResult out{KnSqrtResult::Status::not_square, KnElem(x.rank()), Scalar(0), KnElem(x.rank())};
    if (x.is_zero()) {
        out.status = KnSqrtResult::Status::ok;
        return out;
    }
    LexVec v = x.valuation();
    for (int i = 0; i < x.rank(); ++i)
        if (v[i] % 2 != 0) return out;
    if (x.leading_scalar().sign() < 0) return out;
    auto qn = poly_monic_sqrt(x.num());
    auto qd = poly_monic_sqrt(x.den());
    if (!qn || !qd) return out;
    Scalar c = x.num().lead_coeff() / x.den().lead_coeff();
    KnElem w(*qn, *qd);
    if (auto r = c.try_sqrt()) {
        out.status = KnSqrtResult::Status::ok;
        out.root = w * KnElem::from_scalar(x.rank(), *r);
        return out;
    }
    out.status = KnSqrtResult::Status::blocked;
    out.pending = c;
    out.square_part = w;
    return out;
}

} // namespace hyperval
