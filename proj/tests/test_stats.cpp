#include "doctest.h"

#include <cmath>

#include "ddhooks/error.hpp"
#include "ddhooks/generating.hpp"
#include "ddhooks/stats.hpp"

using namespace ddhooks;

namespace {

std::map<int, mpq_class> masses(std::initializer_list<std::pair<int, mpq_class>> list) {
    std::map<int, mpq_class> m;
    for (auto [k, v] : list) {
        v.canonicalize();
        m[k] = v;
    }
    return m;
}

const auto DD = PartitionClass::doubled_distinct();

}  // namespace

TEST_CASE("small tables") {
    const auto all = PartitionClass::all();
    for (DistSource src : {DistSource::Series, DistSource::Oracle}) {
        const auto d = exact_distribution(10, all, StatisticKind::nt(3), src);
        CHECK(d.mass == masses({{0, mpq_class(1, 21)}, {1, mpq_class(3, 7)}, {2, mpq_class(1, 2)}, {3, mpq_class(1, 42)}}));
        CHECK(d.total_count == 42);
        const auto e = exact_distribution(20, DD, StatisticKind::nt(3), src);
        CHECK(e.mass == masses({{1, mpq_class(1, 5)}, {2, mpq_class(2, 5)}, {3, mpq_class(1, 5)}, {4, mpq_class(1, 5)}}));
        CHECK(e.total_count == 10);
    }
    CHECK(exact_distribution(10, all, StatisticKind::nt(3)).source == "series");
    CHECK(exact_distribution(4, PartitionClass::t_core(3), StatisticKind::nt(2)).source == "oracle");
}

TEST_CASE("size zero is a point mass at zero") {
    const std::vector<std::pair<PartitionClass, StatisticKind>> cases{
        {PartitionClass::all(), StatisticKind::nt(2)},   {DD, StatisticKind::nt(3)},
        {DD, StatisticKind::nhat(2)},                    {PartitionClass::strict(), StatisticKind::st(2)},
        {PartitionClass::self_conjugate(), StatisticKind::n1()}, {PartitionClass::t_core(3), StatisticKind::nt(3)}};
    for (const auto& [cls, stat] : cases) {
        const auto d = exact_distribution(0, cls, stat);
        CHECK(d.mass == masses({{0, mpq_class(1)}}));
        CHECK(d.total_count == 1);
    }
}

TEST_CASE("compatibility and domain errors") {
    CHECK_THROWS_AS(exact_distribution(10, PartitionClass::all(), StatisticKind::nhat(2)), IncompatibleStatistic);
    CHECK_THROWS_AS(exact_distribution(10, PartitionClass::strict(), StatisticKind::nhat(2)), IncompatibleStatistic);
    CHECK_THROWS_AS(exact_distribution(10, DD, StatisticKind::st(2)), IncompatibleStatistic);
    CHECK_THROWS_AS(exact_distribution(10, PartitionClass::all(), StatisticKind::st(2)), IncompatibleStatistic);
    CHECK_THROWS_AS(exact_distribution(7, DD, StatisticKind::nt(2)), DomainError);
    CHECK_THROWS_AS(exact_distribution(-1, PartitionClass::all(), StatisticKind::nt(2)), DomainError);
    CHECK_THROWS_AS(exact_distribution(5, PartitionClass::t_core(3), StatisticKind::nt(2), DistSource::Series),
                    InvalidArgument);
}

TEST_CASE("series and oracle agree") {
    const std::vector<PartitionClass> classes{PartitionClass::all(), DD, PartitionClass::strict(),
                                              PartitionClass::self_conjugate()};
    for (int t = 1; t <= 6; ++t)
        for (int n = 0; n <= 36; ++n)
            for (const auto& cls : classes) {
                std::vector<StatisticKind> stats;
                if (cls.kind == ClassKind::All && n <= 24) stats = {StatisticKind::nt(t)};
                if (cls.kind == ClassKind::DoubledDistinct && n % 2 == 0)
                    stats = {StatisticKind::nt(t), StatisticKind::nhat(t), StatisticKind::n1()};
                if (cls.kind == ClassKind::Strict && n <= 30) stats = {StatisticKind::st(t)};
                if (cls.kind == ClassKind::SelfConjugate && t == 1) stats = {StatisticKind::n1()};
                for (const auto& s : stats) {
                    if (count_partitions(n, cls) == 0)
                        CHECK_THROWS_AS(exact_distribution(n, cls, s), DomainError);
                    else
                        CHECK_NOTHROW(exact_distribution(n, cls, s, DistSource::Auto, true));
                }
            }
}

TEST_CASE("probabilities sum to one") {
    for (int n : {0, 2, 10, 40}) {
        const auto d = exact_distribution(n, DD, StatisticKind::nt(2));
        mpq_class s = 0;
        for (const auto& [v, p] : d.mass) {
            CHECK(v >= 0);
            s += p;
        }
        CHECK(s == 1);
    }
}

TEST_CASE("exact moments") {
    const auto d = exact_distribution(20, DD, StatisticKind::nt(3));
    const auto m = exact_mean_variance(d);
    CHECK(m.mean == mpq_class(12, 5));
    CHECK(m.variance == mpq_class(26, 25));

    const auto point = exact_distribution(2, DD, StatisticKind::nt(3));
    CHECK(exact_mean_variance(point).variance == 0);

    for (int t = 1; t <= 4; ++t)
        for (bool hat : {false, true}) {
            const auto table = dd_moments(t, 30, hat);
            for (int n = 1; n <= 30; ++n) {
                const auto dist = exact_distribution(2 * n, DD, hat ? StatisticKind::nhat(t) : StatisticKind::nt(t));
                const auto em = exact_mean_variance(dist);
                mpq_class mean(table.m1[n], table.count[n]);
                mpq_class second(table.m2[n], table.count[n]);
                mean.canonicalize();
                second.canonicalize();
                CHECK(em.mean == mean);
                CHECK(em.variance == second - mean * mean);
            }
        }
}

TEST_CASE("moment generating function") {
    CHECK(mgf_normalized(3, 50, 0, false) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mgf_normalized(2, 50, 0, true) == doctest::Approx(1.0).epsilon(1e-15));
    const auto d = exact_distribution(100, DD, StatisticKind::nt(3));
    CHECK(mgf_normalized(d, 0.0L, Centering::Exact) == doctest::Approx(1.0).epsilon(1e-15));
    // exact centering: M'(0) = 0, M''(0) = 1
    const Real h = 1e-4L;
    const Real mp = mgf_normalized(d, h, Centering::Exact), mm = mgf_normalized(d, -h, Centering::Exact);
    CHECK(std::fabs((mp - mm) / (2 * h)) < 1e-6L);
    CHECK(std::fabs((mp + mm - 2) / (h * h) - 1) < 1e-4L);

    const Real r = 0.5L;
    const Real g250 = std::fabs(std::log(mgf_normalized(3, 250, r, false)) - r * r / 2);
    const Real g1000 = std::fabs(std::log(mgf_normalized(3, 1000, r, false)) - r * r / 2);
    CHECK(g1000 < g250);
    // symmetry: log M(r) and log M(-r) approach each other
    auto asym = [&](int n) {
        return std::fabs(std::log(mgf_normalized(3, n, r, false)) - std::log(mgf_normalized(3, n, -r, false)));
    };
    CHECK(asym(1000) < asym(250));

    const auto point = exact_distribution(2, DD, StatisticKind::nt(3));
    CHECK_THROWS_AS(mgf_normalized(point, 0.5L, Centering::Exact), DegenerateDistribution);
    CHECK_THROWS_AS(mgf_normalized(exact_distribution(10, PartitionClass::all(), StatisticKind::nt(3)), 0.5L),
                    IncompatibleStatistic);
}

TEST_CASE("distance to normal") {
    CHECK_THROWS_AS(kolmogorov_distance_to_normal(exact_distribution(2, DD, StatisticKind::nt(3))),
                    DegenerateDistribution);
    for (int t : {2, 3}) {
        const Real d200 = kolmogorov_distance_to_normal(exact_distribution(200, DD, StatisticKind::nt(t)));
        const Real d800 = kolmogorov_distance_to_normal(exact_distribution(800, DD, StatisticKind::nt(t)));
        CHECK(d800 < d200);
        CHECK(d200 >= 0);
        CHECK(d200 <= 1);
    }
    CHECK(std::fabs(normal_cdf(0) - 0.5L) < 1e-18L);
    CHECK(std::fabs(normal_cdf(1.959963984540054L) - 0.975L) < 1e-12L);
    CHECK(std::fabs(normal_cdf(-3) - 0.0013498980316300946L) < 1e-12L);
}

TEST_CASE("asymptotic mean against exact") {
    for (int t = 1; t <= 3; ++t) {
        const auto table = dd_moments(t, 1000, false);
        for (int n : {250, 500, 1000}) {
            const Real mean = mpq_class(table.m1[n], table.count[n]).get_d();
            CHECK(std::fabs(mean - mean_var_asymptotic(t, n, false).mean) <= 5 / std::sqrt(static_cast<Real>(n)));
        }
    }
    for (int t = 1; t <= 4; ++t) {
        const auto plain = dd_moments(t, 1000, false);
        const auto hat = dd_moments(t, 1000, true);
        Real prev = 1e9L;
        for (int n : {100, 400, 1000}) {
            const Real mu = mpq_class(plain.m1[n], plain.count[n]).get_d();
            const Real mh = mpq_class(hat.m1[n], hat.count[n]).get_d();
            const Real gap = std::fabs(mh - (mu / 2 + (t % 2 == 1 ? 0.25L : 0)));
            CHECK(gap < prev);
            prev = gap;
        }
    }
}
