#include "doctest.h"

#include "ddhooks/enumerate.hpp"
#include "ddhooks/error.hpp"
#include "ddhooks/generating.hpp"

using namespace ddhooks;

namespace {

using RSeries = TruncatedSeries<RationalRing>;

XPolynomial poly(std::vector<long> c) {
    std::vector<mpq_class> q;
    for (long v : c) q.emplace_back(v);
    return XPolynomial(q);
}

RationalRing::Factor scalar(const mpq_class& v) { return {v, mpq_class(0)}; }

std::shared_ptr<const RationalRing> plain_ring() { return rational_ring(mpq_class(0)); }

mpq_class value(const RSeries& s, std::size_t m) { return extract_value(s, m); }

// s *= (1 - A q^e), with e = 0 meaning the scalar 1 - A.
void mul_factor(RSeries& s, const mpq_class& A, std::size_t e) {
    if (e == 0) s.scale_in_place(scalar(1 - A));
    else s.mul_binomial(scalar(A), e);
}
void div_factor(RSeries& s, const mpq_class& A, std::size_t e) {
    if (e == 0) s.div_exact_in_place(scalar(1 - A));
    else s.div_binomial(scalar(A), e);
}

// (1 - A q^start)(1 - A q^{start+1}) ... as a series.
RSeries infinite(const mpq_class& A, long start, std::size_t N) {
    return pochhammer_inf(plain_ring(), scalar(A), start, 1, N);
}

RSeries strict_even_parts(std::size_t N) { return pochhammer_inf(plain_ring(), scalar(-1), 2, 2, N); }

}  // namespace

TEST_CASE("series arithmetic") {
    const auto ring = plain_ring();
    RSeries a = RSeries::one(ring, 2);
    a.at(1) = ring->scalar(1);
    RSeries b = RSeries::one(ring, 2);
    b.at(1) = ring->scalar(-1);
    const auto p = series_mul(a, b);
    CHECK(value(p, 0) == 1);
    CHECK(value(p, 1) == 0);
    CHECK(value(p, 2) == -1);
    const auto z = series_mul(a, RSeries(ring, 2));
    for (std::size_t i = 0; i <= 2; ++i) CHECK(value(z, i) == 0);
    CHECK_THROWS_AS(series_add(a, RSeries(ring, 3)), OrderMismatch);

    RSeries c(ring, 6), d(ring, 6), e(ring, 6);
    for (std::size_t i = 0; i <= 6; ++i) {
        c.at(i) = ring->scalar(mpq_class(static_cast<long>(i * i) - 3, 7));
        d.at(i) = ring->scalar(mpq_class(2 - static_cast<long>(i), 5));
        e.at(i) = ring->scalar(mpq_class(static_cast<long>(i) + 1, 3));
    }
    const auto l = series_mul(series_mul(c, d), e);
    const auto r = series_mul(c, series_mul(d, e));
    for (std::size_t i = 0; i <= 6; ++i) CHECK(value(l, i) == value(r, i));
    const auto s = series_scale(series_sub(series_add(c, d), d), scalar(mpq_class(1, 2)));
    for (std::size_t i = 0; i <= 6; ++i) CHECK(value(s, i) == value(c, i) / 2);
}

TEST_CASE("pochhammer products") {
    const auto euler = infinite(1, 1, 5);
    const std::vector<long> expect{1, -1, -1, 0, 0, 1};
    for (std::size_t i = 0; i <= 5; ++i) CHECK(value(euler, i) == expect[i]);
    const auto unit = infinite(0, 1, 5);
    for (std::size_t i = 0; i <= 5; ++i) CHECK(value(unit, i) == (i == 0 ? 1 : 0));
    const auto even = strict_even_parts(12);
    for (int m = 0; m <= 12; ++m) {
        std::size_t count = 0;
        for (const auto& p : partitions_of(m, PartitionClass::strict())) {
            bool all_even = true;
            for (int v : p.parts()) all_even = all_even && v % 2 == 0;
            count += all_even;
        }
        CHECK(value(even, static_cast<std::size_t>(m)) == static_cast<long>(count));
    }
    CHECK_THROWS_AS(pochhammer_inf(plain_ring(), scalar(1), 0, 1, 4), InvalidArgument);
}

TEST_CASE("q-binomial theorem with z -> zq") {
    const std::size_t N = 25;
    const std::vector<std::pair<mpq_class, mpq_class>> cases{
        {2, mpq_class(1, 3)}, {-1, mpq_class(1, 2)}, {0, mpq_class(1, 5)}};
    for (const auto& [a, z] : cases) {
        const auto ring = plain_ring();
        RSeries lhs = RSeries::one(ring, N);
        RSeries term = lhs;
        for (std::size_t n = 1; n <= N; ++n) {
            term = term.shifted(scalar(z), 1);
            mul_factor(term, a, n - 1);
            div_factor(term, 1, n);
            lhs += term;
        }
        RSeries rhs = pochhammer_inf(ring, scalar(a * z), 1, 1, N);
        apply_qproduct(rhs, Grid(N, Variable::Q), scalar(z), 1, 1, false, true);
        for (std::size_t m = 0; m <= N; ++m) REQUIRE(value(lhs, m) == value(rhs, m));
    }
}

TEST_CASE("Heine transformation with b -> bq, c -> cq, z -> zq") {
    const std::size_t N = 20;
    struct Tuple {
        mpq_class a, b, c, z;
    };
    const std::vector<Tuple> cases{{2, mpq_class(1, 2), mpq_class(1, 3), 1},
                                   {mpq_class(1, 2), 3, mpq_class(2, 5), mpq_class(1, 4)}};
    for (const auto& [a, b, c, z] : cases) {
        const auto ring = plain_ring();
        const Grid g(N, Variable::Q);
        RSeries lhs = RSeries::one(ring, N);
        RSeries term = lhs;
        for (std::size_t n = 1; n <= N; ++n) {
            term = term.shifted(scalar(z), 1);
            mul_factor(term, a, n - 1);
            mul_factor(term, b, n);
            div_factor(term, 1, n);
            div_factor(term, c, n);
            lhs += term;
        }
        RSeries sum = RSeries::one(ring, N);
        term = sum;
        for (std::size_t n = 1; n <= N; ++n) {
            term = term.shifted(scalar(b), 1);
            mul_factor(term, c / b, n - 1);
            mul_factor(term, z, n);
            div_factor(term, 1, n);
            div_factor(term, a * z, n);
            sum += term;
        }
        apply_qproduct(sum, g, scalar(b), 1, 1);
        apply_qproduct(sum, g, scalar(a * z), 1, 1);
        apply_qproduct(sum, g, scalar(c), 1, 1, false, true);
        apply_qproduct(sum, g, scalar(z), 1, 1, false, true);
        for (std::size_t m = 0; m <= N; ++m) REQUIRE(value(lhs, m) == value(sum, m));
    }
}

TEST_CASE("doubled distinct generating function") {
    const auto f3 = gen_F_t(3, 20);
    CHECK(extract_poly(f3, 0) == poly({1}));
    for (std::size_t m = 1; m <= 20; m += 2) CHECK(extract_poly(f3, m) == XPolynomial());
    const auto p20 = extract_poly(f3, 20);
    CHECK(p20 == poly({0, 2, 4, 2, 2}));
    CHECK(p20.sum() == 10);
    CHECK(p20.degree() == 4);
}

TEST_CASE("generating functions match the oracle") {
    const std::size_t N = 24;
    for (int t = 1; t <= 6; ++t) {
        const auto F = gen_F_t(t, N);
        const auto Fh = gen_Fhat_t(t, N);
        const auto H = gen_han(t, std::min<std::size_t>(N, 16));
        for (int m = 0; m <= static_cast<int>(N); ++m) {
            const auto um = static_cast<std::size_t>(m);
            const auto dd = PartitionClass::doubled_distinct();
            REQUIRE(extract_poly(F, um) == brute_poly(m, StatisticKind::nt(t), dd));
            REQUIRE(extract_poly(Fh, um) == brute_poly(m, StatisticKind::nhat(t), dd));
            if (m <= 16) REQUIRE(extract_poly(H, um) == brute_poly(m, StatisticKind::nt(t), PartitionClass::all()));
            const auto p = extract_poly(F, um);
            REQUIRE(p.has_nonnegative_integer_coeffs());
            REQUIRE(p.degree() <= m / t);
        }
    }
    const auto dn = gen_DD_n1hat(N);
    const auto sn = gen_SC_n1hat(N);
    const auto s1 = gen_SC_n1(N);
    for (int m = 0; m <= static_cast<int>(N); ++m) {
        const auto um = static_cast<std::size_t>(m);
        REQUIRE(extract_poly(dn, um) == brute_poly(m, StatisticKind::nhat(1), PartitionClass::doubled_distinct()));
        REQUIRE(extract_poly(sn, um) == brute_poly(m, StatisticKind::nhat(1), PartitionClass::self_conjugate()));
        REQUIRE(extract_poly(s1, um) == brute_poly(m, StatisticKind::n1(), PartitionClass::self_conjugate()));
    }
    CHECK(extract_poly(dn, 2) == poly({0, 1}));
    CHECK(extract_poly(sn, 1) == poly({1}));
}

TEST_CASE("one-hook sum side equals the product side") {
    const std::size_t N = 40;
    const auto a = gen_F1(N);
    const auto b = gen_F_t(1, N);
    for (std::size_t m = 0; m <= N; ++m) REQUIRE(extract_poly(a, m) == extract_poly(b, m));
    CHECK(extract_poly(a, 2) == poly({0, 1}));
    const auto sym = symbolic_ring();
    const auto ds = gen_DD_n1hat(sym, 30, Variable::Q, Route::Sum);
    const auto dp = gen_DD_n1hat(sym, 30, Variable::Q, Route::Product);
    for (std::size_t m = 0; m <= 30; ++m) REQUIRE(extract_poly(ds, m) == extract_poly(dp, m));
    const auto sym1 = symbolic_ring(Radicand::OneMinusX);
    const auto ss = gen_SC_n1hat(sym1, 30, Route::Sum);
    const auto sp = gen_SC_n1hat(sym1, 30, Route::Product);
    for (std::size_t m = 0; m <= 30; ++m) REQUIRE(extract_poly(ss, m) == extract_poly(sp, m));
}

TEST_CASE("hat generating function: sum side equals the radical product") {
    const auto sym1 = symbolic_ring(Radicand::OneMinusX);
    for (int t : {2, 4, 6}) {
        const auto s = gen_Fhat_t(sym1, t, 36, Variable::Q, Route::Sum);
        const auto p = gen_Fhat_t(sym1, t, 36, Variable::Q, Route::Product);
        for (std::size_t m = 0; m <= 36; ++m) REQUIRE(extract_poly(s, m) == extract_poly(p, m));
    }
    CHECK_THROWS_AS(gen_Fhat_t(symbolic_ring(), 2, 8, Variable::Q, Route::Product), InvalidArgument);
}

TEST_CASE("Han's formula reproduces the size-10 table") {
    const auto h = gen_han(3, 10);
    const auto p = extract_poly(h, 10);
    CHECK(p == poly({2, 18, 21, 1}));
    CHECK(p.sum() == 42);
    for (int m = 0; m <= 12; ++m)
        CHECK(extract_poly(gen_han(1, 12), static_cast<std::size_t>(m)) ==
              brute_poly(m, StatisticKind::nt(1), PartitionClass::all()));
}

TEST_CASE("doubled distinct t-cores") {
    for (int t = 1; t <= 5; ++t) {
        const auto s = gen_tcore_DD(t, 20);
        CHECK(extract_poly(s, 0) == poly({1}));
        for (int m = 0; m <= 20; ++m) {
            const auto c = static_cast<long>(count_partitions(m, PartitionClass::dd_t_core(t)));
            REQUIRE(extract_poly(s, static_cast<std::size_t>(m)) == (c == 0 ? XPolynomial() : poly({c})));
        }
    }
}

TEST_CASE("x = 1 collapse") {
    const auto strict = strict_even_parts(40);
    for (int t = 1; t <= 6; ++t) {
        const auto F = gen_F_t(rational_ring(1), t, 40);
        const auto Fh = gen_Fhat_t(rational_ring(1), t, 40);
        for (std::size_t m = 0; m <= 40; ++m) {
            REQUIRE(extract_value(F, m) == value(strict, m));
            REQUIRE(extract_value(Fh, m) == value(strict, m));
        }
    }
}

TEST_CASE("specialized evaluation modes agree") {
    const mpq_class x(9, 10);
    for (int t = 1; t <= 4; ++t) {
        const auto sym = gen_F_t(t, 30);
        const auto rat = gen_F_t(rational_ring(x), t, 30);
        const auto q2 = gen_F_t(rational_ring(x), t, 15, Variable::Q2);
        const auto sc = dd_values(t, x, 15, false);
        const auto sch = dd_values(t, x, 15, true);
        const auto symh = gen_Fhat_t(t, 30);
        for (std::size_t n = 0; n <= 15; ++n) {
            const mpq_class v = extract_poly(sym, 2 * n).eval(x);
            REQUIRE(extract_value(rat, 2 * n) == v);
            REQUIRE(extract_value(q2, n) == v);
            REQUIRE(sc[n] == v);
            REQUIRE(sch[n] == extract_poly(symh, 2 * n).eval(x));
        }
    }
    const auto sr = scaled_ring(mpq_class(4, 5), Radicand::OneMinusXSquared, 44);
    const auto a = gen_F_t(sr, 2, 40);
    const auto b = gen_F_t(2, 40);
    for (std::size_t m = 0; m <= 40; ++m) REQUIRE(extract_value(a, m) == extract_poly(b, m).eval(mpq_class(4, 5)));
}

TEST_CASE("extraction guards") {
    const auto ring = symbolic_ring();
    TruncatedSeries<SymbolicRing> s(ring, 1);
    s.at(0) = ring->f_y();
    CHECK_THROWS_AS(extract_poly(s, 0), NonCancellation);
    s.at(1) = ring->scalar(RationalFunction(ZPoly(1), ZPoly({mpz_class(1), mpz_class(1)})));
    CHECK_THROWS_AS(extract_poly(s, 1), NonCancellation);
    CHECK_THROWS_AS(s.require_even("test"), NonCancellation);
}

TEST_CASE("moment series") {
    const std::size_t N = 30;
    const auto strict = pochhammer_inf(plain_ring(), scalar(-1), 1, 1, N);
    for (int t : {1, 3, 5}) {
        const auto m1 = moment_series(t, 1, N, false);
        // (-q;q) * t q^t / (1 - q^t)
        RSeries rhs = strict.shifted(scalar(t), static_cast<std::size_t>(t));
        rhs.div_binomial(scalar(1), static_cast<std::size_t>(t));
        for (std::size_t n = 0; n <= N; ++n) REQUIRE(mpq_class(m1[n]) == value(rhs, n));
    }
    const auto m13 = moment_series(3, 1, 10, false);
    CHECK(m13[1] == 0);
    CHECK(m13[10] == 24);
    const auto table = dd_moments(3, 12, false);
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto p = brute_poly(static_cast<int>(2 * n), StatisticKind::nt(3), PartitionClass::doubled_distinct());
        mpq_class s1 = 0, s2 = 0;
        for (int k = 0; k <= p.degree(); ++k) {
            s1 += k * p.coeff(static_cast<std::size_t>(k));
            s2 += k * k * p.coeff(static_cast<std::size_t>(k));
        }
        REQUIRE(mpq_class(table.count[n]) == value(strict, n));
        REQUIRE(mpq_class(table.m1[n]) == s1);
        REQUIRE(mpq_class(table.m2[n]) == s2);
    }
    const auto hat = dd_moments(2, 12, true);
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto p =
            brute_poly(static_cast<int>(2 * n), StatisticKind::nhat(2), PartitionClass::doubled_distinct());
        mpq_class s2 = 0;
        for (int k = 0; k <= p.degree(); ++k) s2 += k * k * p.coeff(static_cast<std::size_t>(k));
        REQUIRE(mpq_class(hat.m2[n]) == s2);
    }
    CHECK_THROWS_AS(moment_series(3, 3, 4, false), InvalidArgument);
}
