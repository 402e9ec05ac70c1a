#include "doctest.h"

#include "ddhooks/enumerate.hpp"
#include "ddhooks/error.hpp"

using namespace ddhooks;

namespace {

XPolynomial poly(std::vector<long> c) {
    std::vector<mpq_class> q;
    for (long v : c) q.emplace_back(v);
    return XPolynomial(q);
}

}  // namespace

TEST_CASE("class counts") {
    CHECK(partitions_of(10, PartitionClass::all()).size() == 42);
    CHECK(partitions_of(20, PartitionClass::doubled_distinct()).size() == 10);
    CHECK(partitions_of(10, PartitionClass::doubled_distinct()).size() == 3);
    CHECK(partitions_of(7, PartitionClass::doubled_distinct()).empty());
    for (auto cls : {PartitionClass::all(), PartitionClass::strict(), PartitionClass::doubled_distinct(),
                     PartitionClass::self_conjugate(), PartitionClass::t_core(3), PartitionClass::dd_t_core(2)}) {
        const auto z = partitions_of(0, cls);
        REQUIRE(z.size() == 1);
        CHECK(z[0].empty());
    }
    for (int n = 0; n <= 20; ++n)
        CHECK(count_partitions(2 * n, PartitionClass::doubled_distinct()) ==
              count_partitions(n, PartitionClass::strict()));
}

TEST_CASE("stream order and membership") {
    const auto all = partitions_of(12, PartitionClass::all());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
    for (auto cls : {PartitionClass::strict(), PartitionClass::self_conjugate(), PartitionClass::t_core(3),
                     PartitionClass::dd_t_core(3)}) {
        std::size_t expected = 0;
        for (const auto& p : all) expected += classify(p, cls);
        const auto got = partitions_of(12, cls);
        CHECK(got.size() == expected);
        for (const auto& p : got) CHECK(classify(p, cls));
    }
}

TEST_CASE("statistic polynomials") {
    CHECK(brute_poly(10, StatisticKind::nt(3), PartitionClass::all()) == poly({2, 18, 21, 1}));
    CHECK(brute_poly(0, StatisticKind::nt(4), PartitionClass::doubled_distinct()) == poly({1}));
    CHECK(brute_poly(20, StatisticKind::nt(3), PartitionClass::doubled_distinct()) == poly({0, 2, 4, 2, 2}));
    for (int n = 0; n <= 30; n += 2)
        CHECK(brute_poly(n, StatisticKind::nt(2), PartitionClass::doubled_distinct()).sum() ==
              count_partitions(n, PartitionClass::doubled_distinct()));
    CHECK_THROWS_AS(brute_poly(6, StatisticKind::st(2), PartitionClass::all()), IncompatibleStatistic);
}

TEST_CASE("shifted hooks over strict partitions equal hat over doubled distinct") {
    for (int t = 1; t <= 4; ++t)
        for (int n = 0; n <= 18; ++n)
            REQUIRE(brute_poly(n, StatisticKind::st(t), PartitionClass::strict()) ==
                    brute_poly(2 * n, StatisticKind::nhat(t), PartitionClass::doubled_distinct()));
}

TEST_CASE("part containment frequency") {
    CHECK(part_containment_frequency(5, 5) == mpq_class(1, 3));
    for (int n = 1; n <= 15; ++n)
        CHECK(part_containment_frequency(n, n) ==
              mpq_class(1, static_cast<unsigned long>(count_partitions(n, PartitionClass::strict()))));
    // Strict partitions of 40 containing 3 are strict partitions of 37 avoiding 3.
    std::size_t with3 = 0;
    for (const auto& p : partitions_of(37, PartitionClass::strict())) with3 += !StrictPartition(p.parts()).contains(3);
    const mpq_class f40 = part_containment_frequency(40, 3);
    mpq_class expected(static_cast<unsigned long>(with3),
                       static_cast<unsigned long>(count_partitions(40, PartitionClass::strict())));
    expected.canonicalize();
    CHECK(f40 == expected);
    const mpq_class half(1, 2);
    CHECK(abs(f40 - half) < abs(part_containment_frequency(20, 3) - half));
    CHECK(abs(part_containment_frequency(60, 3) - half) < abs(f40 - half));
    CHECK_THROWS_AS(part_containment_frequency(0, 1), InvalidArgument);
}

TEST_CASE("statistic parsing") {
    CHECK(parse_statistic("nt", 3) == StatisticKind::nt(3));
    CHECK(parse_statistic("n1", 7) == StatisticKind::n1());
    CHECK_THROWS_AS(parse_statistic("zz", 3), InvalidArgument);
    CHECK_THROWS_AS(StatisticKind::nt(0), InvalidArgument);
}
