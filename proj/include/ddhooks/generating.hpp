#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ddhooks/coeff.hpp"
#include "ddhooks/poly.hpp"
#include "ddhooks/series.hpp"

namespace ddhooks {

/*
 * Series variable.  Q2 stores only even powers of q (index i is q^{2i}),
 * halving the work for generating functions supported on even sizes.
 */
enum class Variable { Q, Q2 };

class Grid {
public:
    Grid(std::size_t order, Variable v) : order_(order), step_(v == Variable::Q2 ? 2 : 1) {}

    std::size_t order() const noexcept { return order_; }
    long q_order() const noexcept { return static_cast<long>(order_) * step_; }
    int step() const noexcept { return step_; }
    bool fits(long e) const noexcept { return e <= q_order(); }
    std::size_t index(long e) const {
        if (e % step_ != 0) throw InvalidArgument("odd q-exponent on the q^2 grid", std::to_string(e));
        return static_cast<std::size_t>(e / step_);
    }

private:
    std::size_t order_;
    int step_;
};

/* Which side of a product/sum identity to expand. */
enum class Route { Product, Sum };

enum class GenName { F, Fhat, F1, Han, TCore, DDn1hat, SCn1hat, SCn1 };
GenName parse_gen_name(const std::string& text);
std::string to_string(GenName g);

/*
 * Multiplies (or divides) s by prod_{k>=0} (1 - A_k q^{start + k step}) with
 * A_k = A, or A_k = (-1)^k A when `alternate` is set.
 */
template <class Ring>
void apply_qproduct(TruncatedSeries<Ring>& s, const Grid& g, const typename Ring::Factor& A, long start, long step,
                    bool alternate = false, bool divide = false) {
    if (start < 1 || step < 1) throw InvalidArgument("q-product needs positive start and step");
    const Ring& ring = s.ring();
    const auto negA = ring.f_neg(A);
    for (long k = 0;; ++k) {
        const long e = start + k * step;
        if (!g.fits(e)) break;
        const auto& a = (alternate && (k % 2 == 1)) ? negA : A;
        if (divide) s.div_binomial(a, g.index(e));
        else s.mul_binomial(a, g.index(e));
    }
}

/* prod_{k>=0} (1 - A q^{start + k step}) truncated at the grid order. */
template <class Ring>
TruncatedSeries<Ring> pochhammer_inf(std::shared_ptr<const Ring> ring, const typename Ring::Factor& A, long start,
                                     long step, std::size_t order, Variable v = Variable::Q) {
    auto s = TruncatedSeries<Ring>::one(ring, order);
    apply_qproduct(s, Grid(order, v), A, start, step);
    return s;
}

namespace detail {

template <class Ring>
void require_radicand(const Ring& ring, Radicand kind, const char* what) {
    if (ring.radicand() != kind) throw InvalidArgument(std::string("wrong radicand for ") + what);
}

template <class Ring>
void require_t(int t) {
    if (t < 1) throw InvalidArgument("t must be positive", std::to_string(t));
}

/* (-q^2;q^2)_inf */
template <class Ring>
TruncatedSeries<Ring> even_strict(const std::shared_ptr<const Ring>& ring, const Grid& g) {
    auto s = TruncatedSeries<Ring>::one(ring, g.order());
    apply_qproduct(s, g, ring->f_int(-1), 2, 2);
    return s;
}

/*
 * Given a y-free series base, returns
 *   [(1+x+y) base * P(-) + (1+x-y) base * P(+)] with P(-+) = prod_{k>=1}(1 +- y (-1)^k Q^k),
 * where Q = q^t; this is 2(1+x) H*(x;Q) * base with all y-odd parts cancelled.
 */
template <class Ring>
TruncatedSeries<Ring> h_star_bracket(const TruncatedSeries<Ring>& base, const Grid& g, int t) {
    const Ring& ring = base.ring();
    require_radicand(ring, Radicand::OneMinusXSquared, "H*");
    const auto y = ring.f_y();
    const auto one_plus_x = ring.f_add(ring.f_int(1), ring.f_x());
    auto minus = base;
    apply_qproduct(minus, g, y, t, t, true);
    auto plus = base;
    apply_qproduct(plus, g, ring.f_neg(y), t, t, true);
    minus.scale_in_place(ring.f_add(one_plus_x, y));
    plus.scale_in_place(ring.f_sub(one_plus_x, y));
    minus += plus;
    minus.require_even("H* branch sum");
    return minus;
}

}  // namespace detail

/* F_t: sum over doubled distinct partitions of x^{n_t} q^{size}. */
template <class Ring>
TruncatedSeries<Ring> gen_F_t(std::shared_ptr<const Ring> ring, int t, std::size_t order, Variable v = Variable::Q) {
    detail::require_t<Ring>(t);
    const Grid g(order, v);
    const auto X = ring->f_one_minus_x2();
    const auto one_plus_x = ring->f_add(ring->f_int(1), ring->f_x());

    auto w = detail::even_strict(ring, g);
    const int power = (t % 2 == 1) ? (t - 1) / 2 : (t - 2) / 2;
    for (int i = 0; i < power; ++i) apply_qproduct(w, g, X, 2L * t, 2L * t);

    auto d = w;
    apply_qproduct(d, g, X, 2L * t, 4L * t);
    auto d2 = std::move(w);
    apply_qproduct(d2, g, X, 4L * t, 4L * t);
    d.add_shifted(d2, ring->f_x(), 0);

    if (t % 2 == 1) {
        d.div_exact_in_place(one_plus_x);
        d.require_even("F_t");
        return d;
    }
    auto r = detail::h_star_bracket(d, g, t);
    r.div_exact_in_place(ring->f_mul(ring->f_int(2), ring->f_mul(one_plus_x, one_plus_x)));
    return r;
}

/* Sum form 1 + x sum_{n>=1} q^{n^2+n} (1-(1-x)q^{2n}) ((1-x^2)q^2;q^2)_{n-1}/(q^2;q^2)_n. */
template <class Ring>
TruncatedSeries<Ring> gen_F1(std::shared_ptr<const Ring> ring, std::size_t order, Variable v = Variable::Q) {
    const Grid g(order, v);
    const auto X = ring->f_one_minus_x2();
    const auto one_minus_x = ring->f_one_minus_x();
    const auto unit = ring->f_int(1);
    auto acc = TruncatedSeries<Ring>::one(ring, order);
    auto term = acc;
    for (long n = 1; g.fits(n * n + n); ++n) {
        term = term.shifted(unit, g.index(2 * n));
        if (n >= 2) term.mul_binomial(X, g.index(2 * (n - 1)));
        term.div_binomial(unit, g.index(2 * n));
        auto u = term;
        u.mul_binomial(one_minus_x, g.index(2 * n));
        acc.add_shifted(u, ring->f_x(), 0);
    }
    return acc;
}

/* F-hat_t: sum over doubled distinct partitions of x^{n-hat_t} q^{size}. */
template <class Ring>
TruncatedSeries<Ring> gen_Fhat_t(std::shared_ptr<const Ring> ring, int t, std::size_t order,
                                 Variable v = Variable::Q, Route route = Route::Sum) {
    detail::require_t<Ring>(t);
    const Grid g(order, v);
    const auto one_minus_x = ring->f_one_minus_x();

    auto w = detail::even_strict(ring, g);
    const int power = (t % 2 == 1) ? (t - 1) / 2 : (t - 2) / 2;
    for (int i = 0; i < power; ++i) apply_qproduct(w, g, one_minus_x, 2L * t, 2L * t);
    apply_qproduct(w, g, one_minus_x, 2L * t, 4L * t);
    if (t % 2 == 1) return w;

    if (route == Route::Sum) {
        // sum_n (x-1)^n q^{tn(2n+1)} / ((-q^t;q^{2t})_n (q^{2t};q^{2t})_n)
        const auto x_minus_1 = ring->f_neg(one_minus_x);
        const auto unit = ring->f_int(1);
        auto acc = w;
        auto term = std::move(w);
        for (long n = 1; g.fits(t * n * (2 * n + 1)); ++n) {
            term = term.shifted(x_minus_1, g.index(t * (4 * n - 1)));
            term.div_binomial(ring->f_int(-1), g.index(t * (2 * n - 1)));
            term.div_binomial(unit, g.index(2L * t * n));
            acc += term;
        }
        return acc;
    }
    // Product side: (1/2)[(-w q^t;-q^t) + (w q^t;-q^t)] with w^2 = 1 - x.
    detail::require_radicand(*ring, Radicand::OneMinusX, "F-hat product side");
    const auto y = ring->f_y();
    auto minus = w;
    apply_qproduct(minus, g, ring->f_neg(y), t, t, true);
    apply_qproduct(w, g, y, t, t, true);
    minus += w;
    minus.require_even("F-hat branch sum");
    minus.div_exact_in_place(ring->f_int(2));
    return minus;
}

/* Sum over doubled distinct partitions of x^{n-hat_1} q^{size}. */
template <class Ring>
TruncatedSeries<Ring> gen_DD_n1hat(std::shared_ptr<const Ring> ring, std::size_t order, Variable v = Variable::Q,
                                   Route route = Route::Product) {
    const Grid g(order, v);
    const auto one_minus_x = ring->f_one_minus_x();
    if (route == Route::Product) {
        auto s = detail::even_strict(ring, g);
        apply_qproduct(s, g, one_minus_x, 2, 4);
        return s;
    }
    // sum_n q^{n^2+n} ((1-x);q^2)_n / (q^2;q^2)_n
    const auto unit = ring->f_int(1);
    auto acc = TruncatedSeries<Ring>::one(ring, order);
    auto term = acc;
    for (long n = 1; g.fits(n * n + n); ++n) {
        if (n == 1) {
            term = term.shifted(ring->f_x(), g.index(2));
        } else {
            term = term.shifted(unit, g.index(2 * n));
            term.mul_binomial(one_minus_x, g.index(2 * (n - 1)));
        }
        term.div_binomial(unit, g.index(2 * n));
        acc += term;
    }
    return acc;
}

/* Sum over self-conjugate partitions of x^{n-hat_1} q^{size}; q variable only. */
template <class Ring>
TruncatedSeries<Ring> gen_SC_n1hat(std::shared_ptr<const Ring> ring, std::size_t order, Route route = Route::Sum) {
    const Grid g(order, Variable::Q);
    if (route == Route::Sum) {
        // sum_n q^{n^2} ((1-x)q^2;q^2)_n / (q^2;q^2)_n
        const auto one_minus_x = ring->f_one_minus_x();
        const auto unit = ring->f_int(1);
        auto acc = TruncatedSeries<Ring>::one(ring, order);
        auto term = acc;
        for (long n = 1; g.fits(n * n); ++n) {
            term = term.shifted(unit, g.index(2 * n - 1));
            term.mul_binomial(one_minus_x, g.index(2 * n));
            term.div_binomial(unit, g.index(2 * n));
            acc += term;
        }
        return acc;
    }
    detail::require_radicand(*ring, Radicand::OneMinusX, "self-conjugate product side");
    auto base = TruncatedSeries<Ring>::one(ring, order);
    apply_qproduct(base, g, ring->f_int(-1), 1, 2);
    const auto y = ring->f_y();
    auto minus = base;
    apply_qproduct(minus, g, ring->f_neg(y), 1, 1, true);
    apply_qproduct(base, g, y, 1, 1, true);
    minus += base;
    minus.require_even("self-conjugate branch sum");
    minus.div_exact_in_place(ring->f_int(2));
    return minus;
}

/* Sum over self-conjugate partitions of x^{n_1} q^{size}: (-q;q^2)_inf H*(x;q). */
template <class Ring>
TruncatedSeries<Ring> gen_SC_n1(std::shared_ptr<const Ring> ring, std::size_t order) {
    const Grid g(order, Variable::Q);
    auto base = TruncatedSeries<Ring>::one(ring, order);
    apply_qproduct(base, g, ring->f_int(-1), 1, 2);
    auto r = detail::h_star_bracket(base, g, 1);
    r.div_exact_in_place(ring->f_mul(ring->f_int(2), ring->f_add(ring->f_int(1), ring->f_x())));
    return r;
}

/* Doubled distinct t-cores counted by size. */
template <class Ring>
TruncatedSeries<Ring> gen_tcore_DD(std::shared_ptr<const Ring> ring, int t, std::size_t order,
                                   Variable v = Variable::Q) {
    detail::require_t<Ring>(t);
    const Grid g(order, v);
    auto s = detail::even_strict(ring, g);
    const auto unit = ring->f_int(1);
    const int power = (t % 2 == 1) ? (t - 1) / 2 : (t - 2) / 2;
    for (int i = 0; i < power; ++i) apply_qproduct(s, g, unit, 2L * t, 2L * t);
    if (t % 2 == 1) apply_qproduct(s, g, ring->f_int(-1), 2L * t, 2L * t, false, true);
    else apply_qproduct(s, g, ring->f_int(-1), t, t, false, true);
    return s;
}

/* Sum over all partitions of x^{n_t} q^{size}: ((1-x)q^t;q^t)^t / (q;q). */
template <class Ring>
TruncatedSeries<Ring> gen_han(std::shared_ptr<const Ring> ring, int t, std::size_t order) {
    detail::require_t<Ring>(t);
    const Grid g(order, Variable::Q);
    auto s = TruncatedSeries<Ring>::one(ring, order);
    for (int i = 0; i < t; ++i) apply_qproduct(s, g, ring->f_one_minus_x(), t, t);
    apply_qproduct(s, g, ring->f_int(1), 1, 1, false, true);
    return s;
}

template <class Ring>
TruncatedSeries<Ring> generate(GenName name, std::shared_ptr<const Ring> ring, int t, std::size_t order,
                               Variable v = Variable::Q) {
    switch (name) {
        case GenName::F: return gen_F_t(ring, t, order, v);
        case GenName::Fhat: return gen_Fhat_t(ring, t, order, v);
        case GenName::F1: return gen_F1(ring, order, v);
        case GenName::Han: return gen_han(ring, t, order);
        case GenName::TCore: return gen_tcore_DD(ring, t, order, v);
        case GenName::DDn1hat: return gen_DD_n1hat(ring, order, v);
        case GenName::SCn1hat: return gen_SC_n1hat(ring, order);
        case GenName::SCn1: return gen_SC_n1(ring, order);
    }
    throw InvalidArgument("unknown generating function");
}

using SymbolicSeries = TruncatedSeries<SymbolicRing>;

/* Symbolic-in-x versions in the variable q. */
SymbolicSeries gen_F_t(int t, std::size_t order);
SymbolicSeries gen_Fhat_t(int t, std::size_t order);
SymbolicSeries gen_F1(std::size_t order);
SymbolicSeries gen_DD_n1hat(std::size_t order);
SymbolicSeries gen_SC_n1hat(std::size_t order);
SymbolicSeries gen_SC_n1(std::size_t order);
SymbolicSeries gen_tcore_DD(int t, std::size_t order);
SymbolicSeries gen_han(int t, std::size_t order);

/* Requires a vanished y-odd part and a polynomial denominator. */
XPolynomial extract_poly(const SymbolicSeries& s, std::size_t m);
mpq_class extract_value(const TruncatedSeries<RationalRing>& s, std::size_t m);
mpq_class extract_value(const TruncatedSeries<ScaledRing>& s, std::size_t m);
Jet extract_jet(const TruncatedSeries<JetRing>& s, std::size_t m);

/*
 * Moments over doubled distinct partitions of size 2n for n = 0..n_max,
 * from jets at x = 1: count = q(n), m1 = sum of the statistic, m2 = sum of
 * its square.  `hat` selects n-hat_t instead of n_t.
 */
struct MomentTable {
    std::vector<mpz_class> count, m1, m2;
};
MomentTable dd_moments(int t, std::size_t n_max, bool hat);

/* Coefficient of q^n is m_{k,t}(2n) (or its hat analogue), n = 0..n_max. */
std::vector<mpz_class> moment_series(int t, int k, std::size_t n_max, bool hat);

/* Exact values of dd_t(2n; x) (or the hat analogue) for n = 0..n_max at rational x. */
std::vector<mpq_class> dd_values(int t, const mpq_class& x, std::size_t n_max, bool hat);

}  // namespace ddhooks
