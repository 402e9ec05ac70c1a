#pragma once

#include <memory>
#include <vector>

#include <gmpxx.h>

#include "ddhooks/error.hpp"
#include "ddhooks/poly.hpp"

namespace ddhooks {

/*
 * Coefficient rings for truncated q-series.  Every ring adjoins a formal
 * square root y of either 1 - x^2 or 1 - x and exposes the same interface:
 *
 *   Elem                    stored series coefficient
 *   Factor                  multiplier appearing in q-products (x, 1-x^2, y, ...)
 *   fma(dst, f, src)        dst += f * src
 *   fms(dst, f, src)        dst -= f * src
 *   fma_elem(dst, a, b)     dst += a * b for two stored coefficients
 *   scale(f, e)             f * e
 *   div_exact(e, f)         e / f, raising NonCancellation when the quotient
 *                           leaves the ring's exact domain
 */
enum class Radicand { OneMinusXSquared, OneMinusX };

/* Second-order jet c0 + c1 e + c2 e^2 with e^3 = 0. */
struct Jet {
    mpq_class c0, c1, c2;

    Jet() = default;
    Jet(long v) : c0(v) {}  // NOLINT(google-explicit-constructor)
    Jet(mpq_class a, mpq_class b, mpq_class c) : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}

    bool is_zero() const { return sgn(c0) == 0 && sgn(c1) == 0 && sgn(c2) == 0; }

    Jet& operator+=(const Jet& o) {
        c0 += o.c0;
        c1 += o.c1;
        c2 += o.c2;
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        c0 -= o.c0;
        c1 -= o.c1;
        c2 -= o.c2;
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(const Jet& a) { return Jet(-a.c0, -a.c1, -a.c2); }
    friend Jet operator*(const Jet& a, const Jet& b) {
        return Jet(a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0);
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        if (sgn(b.c0) == 0) throw DomainError("jet division by a non-unit");
        // 1/(b0 + u) = (1/b0)(1 - u/b0 + (u/b0)^2) with u = b1 e + b2 e^2.
        const mpq_class i0 = 1 / b.c0;
        const mpq_class u1 = b.c1 * i0, u2 = b.c2 * i0;
        const Jet inv(i0, -u1 * i0, (u1 * u1 - u2) * i0);
        return a * inv;
    }
    friend bool operator==(const Jet&, const Jet&) = default;
};

inline bool is_zero_scalar(const mpq_class& v) { return sgn(v) == 0; }
inline bool is_zero_scalar(const RationalFunction& v) { return v.is_zero(); }
inline bool is_zero_scalar(const Jet& v) { return v.is_zero(); }

inline void require_exact(const mpq_class&) {}
inline void require_exact(const Jet&) {}
inline void require_exact(const RationalFunction& v) {
    if (!v.is_polynomial()) throw NonCancellation("denominator did not clear", v.to_string());
}

template <class F>
struct QuadElem {
    F even{};
    F odd{};
    friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

/* F[y]/(y^2 - d) over a field-like scalar type F, with d = 1 - x^2 or 1 - x. */
template <class F>
class QuadraticRing {
public:
    using Scalar = F;
    using Elem = QuadElem<F>;
    using Factor = Elem;

    QuadraticRing(F x, Radicand kind)
        : x_(std::move(x)), kind_(kind), d_(kind == Radicand::OneMinusXSquared ? F(F(1) - x_ * x_) : F(F(1) - x_)) {}

    Radicand radicand() const noexcept { return kind_; }
    const F& x_value() const noexcept { return x_; }
    const F& d() const noexcept { return d_; }

    Elem zero() const { return {F(0), F(0)}; }
    Elem one() const { return {F(1), F(0)}; }
    Elem scalar(F v) const { return {std::move(v), F(0)}; }

    Factor f_int(long v) const { return {F(v), F(0)}; }
    Factor f_x() const { return {x_, F(0)}; }
    Factor f_one_minus_x2() const { return {F(1) - x_ * x_, F(0)}; }
    Factor f_one_minus_x() const { return {F(1) - x_, F(0)}; }
    Factor f_y() const { return {F(0), F(1)}; }
    Factor f_add(const Factor& a, const Factor& b) const { return {a.even + b.even, a.odd + b.odd}; }
    Factor f_sub(const Factor& a, const Factor& b) const { return {a.even - b.even, a.odd - b.odd}; }
    Factor f_neg(const Factor& a) const { return {F(0) - a.even, F(0) - a.odd}; }
    Factor f_mul(const Factor& a, const Factor& b) const { return mul(a, b); }
    bool f_is_zero(const Factor& a) const { return is_zero(a); }
    Elem from_factor(const Factor& f) const { return f; }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem r = zero();
        fma_elem(r, a, b);
        return r;
    }
    Elem scale(const Factor& f, const Elem& e) const { return mul(f, e); }

    void add_to(Elem& dst, const Elem& src) const {
        dst.even += src.even;
        if (!is_zero_scalar(src.odd)) dst.odd += src.odd;
    }
    void sub_from(Elem& dst, const Elem& src) const {
        dst.even -= src.even;
        if (!is_zero_scalar(src.odd)) dst.odd -= src.odd;
    }

    void fma_elem(Elem& dst, const Elem& a, const Elem& b) const { accumulate(dst, a, b, false); }
    void fma(Elem& dst, const Factor& f, const Elem& src) const { accumulate(dst, f, src, false); }
    void fms(Elem& dst, const Factor& f, const Elem& src) const { accumulate(dst, f, src, true); }

    Elem div_exact(const Elem& e, const Factor& f) const {
        Elem r;
        if (is_zero_scalar(f.odd)) {
            r = {e.even / f.even, e.odd / f.even};
        } else {
            // (e0 + e1 y)/(f0 + f1 y) = (e0 + e1 y)(f0 - f1 y)/(f0^2 - f1^2 d).
            const F norm = f.even * f.even - f.odd * f.odd * d_;
            const Elem conj{f.even, F(0) - f.odd};
            const Elem num = mul(e, conj);
            r = {num.even / norm, num.odd / norm};
        }
        require_exact(r.even);
        require_exact(r.odd);
        return r;
    }

    bool is_zero(const Elem& e) const { return is_zero_scalar(e.even) && is_zero_scalar(e.odd); }
    bool odd_is_zero(const Elem& e) const { return is_zero_scalar(e.odd); }

private:
    void accumulate(Elem& dst, const Elem& a, const Elem& b, bool subtract) const {
        const bool ao = !is_zero_scalar(a.odd);
        const bool bo = !is_zero_scalar(b.odd);
        F ee = a.even * b.even;
        if (ao && bo) ee += a.odd * b.odd * d_;
        if (subtract) dst.even -= ee;
        else dst.even += ee;
        if (ao || bo) {
            F oo(0);
            if (bo) oo += a.even * b.odd;
            if (ao) oo += a.odd * b.even;
            if (subtract) dst.odd -= oo;
            else dst.odd += oo;
        }
    }

    F x_;
    Radicand kind_;
    F d_;
};

using SymbolicRing = QuadraticRing<RationalFunction>;
using RationalRing = QuadraticRing<mpq_class>;
using JetRing = QuadraticRing<Jet>;

std::shared_ptr<const SymbolicRing> symbolic_ring(Radicand kind = Radicand::OneMinusXSquared);
std::shared_ptr<const RationalRing> rational_ring(const mpq_class& x, Radicand kind = Radicand::OneMinusXSquared);
/* Jets at x = 1 + e. */
std::shared_ptr<const JetRing> jet_ring(Radicand kind = Radicand::OneMinusXSquared);

/*
 * Exact arithmetic at a rational point x = a/b without gcd normalization.
 * With y = s/b and s^2 = D (D = b^2 - a^2 or b(b - a)), a stored coefficient
 * (E, O) means (E + O s) / L for the fixed L = b^K.  Every product that occurs
 * in the generating functions has denominators dividing b^K, so all updates
 * are exact integer operations.
 */
class ScaledRing {
public:
    struct Elem {
        mpz_class e, o;
        friend bool operator==(const Elem&, const Elem&) = default;
    };
    /* (e + o s) / b^delta */
    struct Factor {
        mpz_class e, o;
        unsigned delta = 0;
    };

    /* `span` bounds the b-adic degree of any value in the series. */
    ScaledRing(const mpq_class& x, Radicand kind, std::size_t span);

    Radicand radicand() const noexcept { return kind_; }
    const mpq_class& x_value() const noexcept { return x_; }

    Elem zero() const { return {}; }
    Elem one() const { return {L_, 0}; }

    Factor f_int(long v) const { return {v, 0, 0}; }
    Factor f_x() const { return {a_, 0, 1}; }
    Factor f_one_minus_x2() const { return {b_ * b_ - a_ * a_, 0, 2}; }
    Factor f_one_minus_x() const { return {b_ - a_, 0, 1}; }
    Factor f_y() const { return {0, 1, 1}; }
    Factor f_add(const Factor& p, const Factor& q) const;
    Factor f_sub(const Factor& p, const Factor& q) const;
    Factor f_neg(const Factor& p) const { return {-p.e, -p.o, p.delta}; }
    Factor f_mul(const Factor& p, const Factor& q) const;
    bool f_is_zero(const Factor& p) const { return p.e == 0 && p.o == 0; }
    Elem from_factor(const Factor& f) const;

    Elem mul(const Elem& p, const Elem& q) const;
    Elem scale(const Factor& f, const Elem& v) const;
    void add_to(Elem& dst, const Elem& src) const {
        dst.e += src.e;
        dst.o += src.o;
    }
    void sub_from(Elem& dst, const Elem& src) const {
        dst.e -= src.e;
        dst.o -= src.o;
    }
    void fma_elem(Elem& dst, const Elem& p, const Elem& q) const { add_to(dst, mul(p, q)); }
    void fma(Elem& dst, const Factor& f, const Elem& src) const { accumulate(dst, f, src, false); }
    void fms(Elem& dst, const Factor& f, const Elem& src) const { accumulate(dst, f, src, true); }
    Elem div_exact(const Elem& v, const Factor& f) const;

    bool is_zero(const Elem& v) const { return v.e == 0 && v.o == 0; }
    bool odd_is_zero(const Elem& v) const { return v.o == 0; }

    /* Value of the y-free part and the coefficient of y. */
    mpq_class even_value(const Elem& v) const;
    mpq_class odd_value(const Elem& v) const;

private:
    const mpz_class& bpow(unsigned k) const;
    void accumulate(Elem& dst, const Factor& f, const Elem& src, bool subtract) const;
    void divexact_checked(mpz_class& v, const mpz_class& d) const;

    mpq_class x_;
    Radicand kind_;
    mpz_class a_, b_, D_, L_;
    std::vector<mpz_class> bpow_;
};

std::shared_ptr<const ScaledRing> scaled_ring(const mpq_class& x, Radicand kind, std::size_t span);

}  // namespace ddhooks
