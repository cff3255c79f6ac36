#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperval/errors.hpp"
#include "hyperval/lexvec.hpp"
#include "hyperval/scalar.hpp"

namespace hyperval {

/// Sparse multivariate polynomial in t_1..t_n over the scalar tower.
///
/// Exponent vectors use the same coordinate convention as LexVec: index 0 is
/// the exponent of the outermost variable t_n. The map is ordered
/// lexicographically, so begin() is the term of minimal value; its exponent
/// vector is the valuation of the polynomial.
class Poly {
public:
    using Exp = std::vector<std::int64_t>;
    using Terms = std::map<Exp, Scalar>;

    explicit Poly(int rank = 0) : rank_(rank) {}

    static Poly constant(int rank, const Scalar& c) {
        Poly p(rank);
        if (!c.is_zero()) p.t_.emplace(Exp(static_cast<size_t>(rank), 0), c);
        return p;
    }
    static Poly monomial(int rank, const Exp& e, const Scalar& c) {
        require(static_cast<int>(e.size()) == rank, errc::rank_mismatch, "monomial exponent rank mismatch");
        for (auto x : e) require(x >= 0, errc::internal, "negative exponent in polynomial monomial");
        Poly p(rank);
        if (!c.is_zero()) p.t_.emplace(e, c);
        return p;
    }
    /// The variable with exponent-vector coordinate `coord` (t_{n-coord}).
    static Poly coord_var(int rank, int coord) {
        Exp e(static_cast<size_t>(rank), 0);
        e[static_cast<size_t>(coord)] = 1;
        return monomial(rank, e, Scalar(1));
    }

    int rank() const { return rank_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && is_zero_exp(t_.begin()->first)); }
    Scalar constant_value() const {
        if (t_.empty()) return Scalar(0);
        require(is_constant(), errc::internal, "constant_value on non-constant polynomial");
        return t_.begin()->second;
    }

    /// Exponent vector of the lex-minimal term.
    LexVec valuation() const {
        require(!t_.empty(), errc::zero_input, "valuation of the zero polynomial");
        return LexVec(t_.begin()->first);
    }
    const Scalar& lead_coeff() const {
        require(!t_.empty(), errc::zero_input, "lead_coeff of the zero polynomial");
        return t_.begin()->second;
    }
    /// Minimal exponent of the most significant variable (= first coordinate
    /// of the valuation).
    std::int64_t min_exp0() const {
        require(!t_.empty(), errc::zero_input, "min_exp0 of the zero polynomial");
        return t_.begin()->first[0];
    }
    std::int64_t max_exp0() const {
        std::int64_t m = 0;
        bool any = false;
        for (const auto& [e, c] : t_) {
            if (!any || e[0] > m) m = e[0];
            any = true;
        }
        require(any, errc::zero_input, "max_exp0 of the zero polynomial");
        return m;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_rank(b);
        Poly r(a);
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_rank(b);
        Poly r(a);
        for (const auto& [e, c] : b.t_) r.add_term(e, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(*this);
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_rank(b);
        Poly r(a.rank_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exp e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const Poly& a, const Scalar& s) {
        Poly r(a.rank_);
        if (s.is_zero()) return r;
        r = a;
        for (auto& [e, c] : r.t_) c = c * s;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.check_rank(b);
        if (a.t_.size() != b.t_.size()) return false;
        auto ia = a.t_.begin();
        auto ib = b.t_.begin();
        for (; ia != a.t_.end(); ++ia, ++ib) {
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        }
        return true;
    }

    /// Shift coordinate-0 exponents down by c (all terms must allow it).
    Poly shifted0(std::int64_t c) const {
        Poly r(rank_);
        for (const auto& [e, co] : t_) {
            require(e[0] >= c, errc::internal, "shifted0 would create a negative exponent");
            Exp e2(e);
            e2[0] -= c;
            r.t_.emplace(std::move(e2), co);
        }
        return r;
    }

    /// Evaluation at t_n = 0: keeps terms with exponent 0 in coordinate 0 and
    /// drops that coordinate. Result has rank n-1.
    Poly residue0() const {
        require(rank_ >= 1, errc::rank_mismatch, "residue0 needs rank >= 1");
        Poly r(rank_ - 1);
        for (const auto& [e, c] : t_)
            if (e[0] == 0) r.t_.emplace(Exp(e.begin() + 1, e.end()), c);
        return r;
    }

    /// Embed a rank-(n-1) polynomial as a rank-n polynomial constant in t_n.
    Poly lifted0() const {
        Poly r(rank_ + 1);
        for (const auto& [e, c] : t_) {
            Exp e2(e.size() + 1, 0);
            for (size_t i = 0; i < e.size(); ++i) e2[i + 1] = e[i];
            r.t_.emplace(std::move(e2), c);
        }
        return r;
    }

    // ---- univariate view in coordinate 0 (coefficients of rank n-1) ----

    std::int64_t deg0() const { return is_zero() ? -1 : max_exp0(); }

    Poly coeff0(std::int64_t d) const {
        Poly r(rank_ - 1);
        for (const auto& [e, c] : t_)
            if (e[0] == d) r.t_.emplace(Exp(e.begin() + 1, e.end()), c);
        return r;
    }

    static Poly from_view0(int rank, const std::map<std::int64_t, Poly>& view) {
        Poly r(rank);
        for (const auto& [d, p] : view)
            for (const auto& [e, c] : p.terms()) {
                Exp e2(e.size() + 1, 0);
                e2[0] = d;
                for (size_t i = 0; i < e.size(); ++i) e2[i + 1] = e[i];
                r.t_.emplace(std::move(e2), c);
            }
        return r;
    }

    std::map<std::int64_t, Poly> view0() const {
        std::map<std::int64_t, Poly> v;
        for (const auto& [e, c] : t_) {
            auto it = v.find(e[0]);
            if (it == v.end()) it = v.emplace(e[0], Poly(rank_ - 1)).first;
            it->second.add_term(Exp(e.begin() + 1, e.end()), c);
        }
        return v;
    }

    std::string str(int outer_var_index) const;

private:
    static bool is_zero_exp(const Exp& e) {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }

    void add_term(const Exp& e, const Scalar& c) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            if (!c.is_zero()) t_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }

    void check_rank(const Poly& o) const {
        require(rank_ == o.rank_, errc::rank_mismatch, "polynomial rank mismatch");
    }

    int rank_;
    Terms t_;

    friend Poly poly_divexact(const Poly& a, const Poly& b);
    friend Poly poly_gcd(const Poly& a, const Poly& b);
};

// ---------------------------------------------------------------------------
// exact division, gcd (primitive PRS over the recursive coefficient ring)
// ---------------------------------------------------------------------------

Poly poly_divexact(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

inline Poly lc0(const Poly& p) { return p.coeff0(p.deg0()); }

inline Poly mul_pow0(const Poly& p, std::int64_t d) {
    Poly r(p.rank());
    std::map<std::int64_t, Poly> v;
    for (const auto& [dd, c] : p.view0()) v.emplace(dd + d, c);
    return Poly::from_view0(p.rank(), v);
}

// content of p with respect to coordinate 0 (gcd of view coefficients)
inline Poly cont0(const Poly& p) {
    Poly g(p.rank() - 1);
    for (const auto& [d, c] : p.view0()) {
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

inline mpq_class rat_content(const Poly& p);
inline Poly strip_rat(const Poly& p);

// pseudo-remainder up to a rational factor; only ever used modulo content
inline Poly prem0(Poly f, const Poly& g) {
    std::int64_t dg = g.deg0();
    Poly lg = lc0(g);
    while (!f.is_zero() && f.deg0() >= dg) {
        Poly lf = lc0(f);
        std::int64_t d = f.deg0() - dg;
        f = strip_rat(f * lg.lifted0() - mul_pow0(lf.lifted0() * g, d));
    }
    return f;
}

// positive rational content over all scalar coordinates; stripping it keeps
// pseudo-remainder sequences integer-primitive and tame
inline mpq_class rat_content(const Poly& p) {
    mpz_class gnum(0), dlcm(1);
    for (const auto& [e, c] : p.terms()) {
        for (const auto& q : c.coeffs()) {
            if (sgn(q) == 0) continue;
            mpz_class n = q.get_num();
            mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), n.get_mpz_t());
            mpz_class d = q.get_den();
            mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), d.get_mpz_t());
        }
    }
    if (gnum == 0) return mpq_class(1);
    mpq_class r(gnum, dlcm);
    r.canonicalize();
    return r;
}

inline Poly strip_rat(const Poly& p) {
    if (p.is_zero()) return p;
    mpq_class c = rat_content(p);
    if (c == 1) return p;
    return p * Scalar(mpq_class(1) / c);
}

} // namespace detail

/// Exact polynomial division; all intermediate steps must divide exactly.
inline Poly poly_divexact(const Poly& a, const Poly& b) {
    require(!b.is_zero(), errc::division_by_zero, "poly_divexact by zero");
    if (a.is_zero()) return Poly(a.rank());
    if (a.rank() == 0) return Poly::constant(0, a.constant_value() / b.constant_value());
    Poly f(a);
    std::map<std::int64_t, Poly> q;
    std::int64_t dg = b.deg0();
    Poly lg = detail::lc0(b);
    while (!f.is_zero()) {
        std::int64_t df = f.deg0();
        require(df >= dg, errc::internal, "poly_divexact: inexact division");
        Poly qc = poly_divexact(detail::lc0(f), lg);
        q.emplace(df - dg, qc);
        f = f - detail::mul_pow0(qc.lifted0() * b, df - dg);
    }
    return Poly::from_view0(a.rank(), q);
}

/// Normalize so the lex-minimal term has coefficient 1.
inline Poly poly_normalized(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.lead_coeff().inverse();
}

namespace detail {

// gcd with a single-term polynomial: coordinate-wise exponent minimum
inline Poly monomial_gcd(const Poly& mono, const Poly& p) {
    Poly::Exp e = mono.terms().begin()->first;
    for (const auto& [pe, c] : p.terms())
        for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], pe[i]);
    return Poly::monomial(p.rank(), e, Scalar(1));
}

// Substitute integers for all variables except the most significant one.
inline Poly eval_lower(const Poly& p, const std::vector<long>& vals) {
    Poly out(1);
    for (const auto& [e, c] : p.terms()) {
        Scalar v = c;
        for (size_t i = 1; i < e.size(); ++i) {
            mpz_class b(vals[i - 1]);
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e[i]));
            v = v * Scalar(mpq_class(pw));
        }
        out = out + Poly::monomial(1, {e[0]}, v);
    }
    return out;
}

// Certified test that two primitive polynomials are coprime: if an
// evaluation of the lower variables that preserves both leading degrees
// yields coprime univariate images, the gcd has degree 0 in the main
// variable, hence divides both contents and is a unit.
inline bool certified_coprime0(const Poly& f, const Poly& g) {
    static const std::vector<std::vector<long>> points = {
        {2, 3, 5, 7, 11, 13}, {3, 5, 2, 11, 7, 17}, {5, 7, 11, 2, 3, 19}, {7, 11, 3, 13, 2, 5}};
    size_t need = static_cast<size_t>(f.rank() - 1);
    for (const auto& pt : points) {
        std::vector<long> vals(pt.begin(), pt.begin() + static_cast<long>(need));
        Poly fe = eval_lower(f, vals), ge = eval_lower(g, vals);
        if (fe.is_zero() || ge.is_zero()) continue;
        if (fe.deg0() != f.deg0() || ge.deg0() != g.deg0()) continue;
        Poly h = poly_gcd(fe, ge);
        if (h.deg0() == 0) return true;
    }
    return false;
}

} // namespace detail

inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return poly_normalized(b);
    if (b.is_zero()) return poly_normalized(a);
    if (a.rank() == 0) return Poly::constant(0, Scalar(1));
    if (a.term_count() == 1) return detail::monomial_gcd(a, b);
    if (b.term_count() == 1) return detail::monomial_gcd(b, a);
    if (a == b) return poly_normalized(a);
    if (a.rank() == 1) {
        Poly f = detail::strip_rat(a), g = detail::strip_rat(b);
        if (f.deg0() < g.deg0()) std::swap(f, g);
        while (!g.is_zero()) {
            Poly r = detail::prem0(f, g);
            f = g;
            g = detail::strip_rat(r);
        }
        return poly_normalized(f);
    }
    Poly ca = detail::cont0(a), cb = detail::cont0(b);
    Poly c = poly_gcd(ca, cb);
    Poly f = detail::strip_rat(poly_divexact(a, ca.lifted0()));
    Poly g = detail::strip_rat(poly_divexact(b, cb.lifted0()));
    if (detail::certified_coprime0(f, g)) return poly_normalized(c.lifted0());
    if (f.deg0() < g.deg0()) std::swap(f, g);
    while (true) {
        if (g.deg0() == 0) {
            g = Poly::constant(a.rank() - 1, Scalar(1)).lifted0();
            break;
        }
        Poly r = detail::prem0(f, g);
        if (r.is_zero()) {
            g = poly_divexact(g, detail::cont0(g).lifted0());
            break;
        }
        f = g;
        g = detail::strip_rat(poly_divexact(r, detail::cont0(r).lifted0()));
    }
    return poly_normalized(c.lifted0() * g);
}

/// Square root of a polynomial that is a scalar multiple of a perfect
/// square: returns q with q*q == p / p.lead_coeff(). Fails with nullopt when
/// p is not of that shape.
inline std::optional<Poly> poly_monic_sqrt(const Poly& p_in) {
    if (p_in.is_zero()) return Poly(p_in.rank());
    Poly p = poly_normalized(p_in);
    LexVec v = p.valuation();
    Poly::Exp half(v.coords());
    for (auto& x : half) {
        if (x % 2 != 0) return std::nullopt;
        x /= 2;
    }
    Poly q = Poly::monomial(p.rank(), half, Scalar(1));
    LexVec vmax(p.terms().rbegin()->first);
    size_t cap = 4 * p.term_count() + 32;
    while (true) {
        Poly r = p - q * q;
        if (r.is_zero()) return q;
        if (cap-- == 0) return std::nullopt;
        LexVec vr = r.valuation();
        Poly::Exp te(vr.coords());
        bool ok = true;
        for (size_t i = 0; i < te.size(); ++i) {
            te[i] -= half[i];
            if (te[i] < 0) ok = false;
        }
        if (!ok || LexVec(te) > vmax) return std::nullopt;
        q = q + Poly::monomial(p.rank(), te, r.lead_coeff() * Scalar(mpq_class(1, 2)));
    }
}

inline std::string Poly::str(int n_vars) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : t_) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(n_vars - static_cast<int>(i));
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        bool composite = cs.find(' ') != std::string::npos;
        std::string piece;
        if (mono.empty())
            piece = composite ? "(" + cs + ")" : cs;
        else if (cs == "1")
            piece = mono;
        else
            piece = (composite ? "(" + cs + ")" : cs) + "*" + mono;
        if (first) {
            out += (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

} // namespace hyperval
