#include "doctest.h"

#include "ddhooks/enumerate.hpp"
#include "ddhooks/error.hpp"
#include "ddhooks/littlewood.hpp"

using namespace ddhooks;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
StrictPartition S(std::vector<int> v) { return StrictPartition(std::move(v)); }

// Independent core: strip rim hooks of length t until none remain.
Partition core_by_rim_hooks(Partition p, int t) {
    for (;;) {
        const auto h = hook_lengths(p);
        const auto c = conjugate(p);
        bool removed = false;
        for (std::size_t i = 0; i < h.size() && !removed; ++i)
            for (std::size_t j = 0; j < h[i].size() && !removed; ++j) {
                if (h[i][j] != t) continue;
                std::vector<int> rows = p.parts();
                const std::size_t leg = static_cast<std::size_t>(c.row(j)) - (i + 1);
                for (std::size_t r = i; r < i + leg; ++r) rows[r] = p.row(r + 1) - 1;
                rows[i + leg] = static_cast<int>(j);
                while (!rows.empty() && rows.back() == 0) rows.pop_back();
                p = Partition(rows);
                removed = true;
            }
        if (!removed) return p;
    }
}

int quotient_size(const QuotientDecomposition& d) {
    int s = 0;
    for (const auto& q : d.quotient) s += q.size();
    return s;
}

}  // namespace

TEST_CASE("frobenius symbols") {
    CHECK(frobenius(P({6, 6, 4, 2, 2})) == FrobeniusSymbol{{5, 4, 1}, {4, 3, 0}});
    CHECK(frobenius(P({})) == FrobeniusSymbol{});
    CHECK(frobenius(P({5, 4, 1})) == FrobeniusSymbol{{4, 2}, {2, 0}});
    CHECK(from_frobenius({{5, 4, 1}, {4, 3, 0}}) == P({6, 6, 4, 2, 2}));
    CHECK(from_frobenius({}) == P({}));
    CHECK(from_frobenius({{4, 2}, {2, 0}}) == P({5, 4, 1}));
    CHECK_THROWS_AS(from_frobenius({{1, 2}, {1, 0}}), MalformedArray);
    CHECK_THROWS_AS(from_frobenius({{1}, {1, 0}}), MalformedArray);
    for (int n = 0; n <= 30; ++n) {
        PartitionStream stream(n, PartitionClass::all());
        while (auto p = stream.next()) REQUIRE(from_frobenius(frobenius(*p)) == *p);
    }
}

TEST_CASE("wright map") {
    CHECK(wright_map({{2, 1}, {1, 0}}) == P({3, 3}));
    CHECK(wright_map({{0}, {1, 0}}) == P({2}));
    CHECK(wright_map({{1}, {}}) == P({1}));
    CHECK(wright_map({{}, {}}) == P({}));
    CHECK_THROWS_AS(wright_map({{1, 1}, {}}), MalformedArray);
    CHECK_THROWS_AS(wright_map({{-1}, {}}), MalformedArray);
}

TEST_CASE("littlewood worked example") {
    const Partition p = from_frobenius({{7, 5, 4, 0}, {5, 4, 2, 1}});
    const auto d = littlewood_decompose(p, 3);
    CHECK(p == P({8, 7, 7, 4, 4, 2}));
    CHECK(d.quotient == std::vector<Partition>{P({2}), P({3, 3}), P({1})});
    // The quotient accounts for 27 of the 32 boxes; the rest is the 3-core.
    CHECK(d.core == P({3, 1, 1}));
    CHECK(littlewood_compose({3, P({3, 1, 1}), {P({2}), P({3, 3}), P({1})}}) == p);
    const Partition bare = littlewood_compose({3, P({}), {P({2}), P({3, 3}), P({1})}});
    CHECK(bare.size() == 27);
    CHECK(littlewood_decompose(bare, 3).quotient == d.quotient);
    const auto e = littlewood_decompose(P({}), 4);
    CHECK(e.core == P({}));
    CHECK(e.quotient == std::vector<Partition>(4));
    CHECK(littlewood_compose({4, P({}), std::vector<Partition>(4)}) == P({}));
}

TEST_CASE("littlewood size identity and errors") {
    const Partition dd = P({6, 6, 4, 2, 2});
    const auto d = littlewood_decompose(dd, 3);
    CHECK(dd.size() == d.core.size() + 3 * quotient_size(d));
    CHECK(is_t_core(d.core, 3));
    CHECK_THROWS_AS(littlewood_compose({3, P({3}), {P({}), P({}), P({})}}), CoreNotTCore);
    CHECK_THROWS_AS(littlewood_compose({3, P({}), {P({})}}), InvalidArgument);
    CHECK(t_core(dd, 1) == P({}));
    CHECK(t_core(P({2}), 3) == P({2}));
}

TEST_CASE("littlewood roundtrip") {
    for (int t = 1; t <= 5; ++t)
        for (int n = 0; n <= 16; ++n) {
            PartitionStream stream(n, PartitionClass::all());
            while (auto p = stream.next()) {
                const auto d = littlewood_decompose(*p, t);
                REQUIRE(d.quotient.size() == static_cast<std::size_t>(t));
                REQUIRE(is_t_core(d.core, t));
                REQUIRE(p->size() == d.core.size() + t * quotient_size(d));
                REQUIRE(littlewood_compose(d) == *p);
            }
        }
}

TEST_CASE("t-core matches rim hook removal") {
    for (int t = 1; t <= 4; ++t)
        for (int n = 0; n <= 14; ++n) {
            PartitionStream stream(n, PartitionClass::all());
            while (auto p = stream.next()) REQUIRE(t_core(*p, t) == core_by_rim_hooks(*p, t));
        }
}

TEST_CASE("doubled distinct decomposition") {
    const auto d = dd_decompose(P({6, 6, 4, 2, 2}), 3);
    int ones = 0;
    for (const auto& q : d.quotient) ones += count_t_hooks(q, 1);
    CHECK(ones == 2);
    CHECK(check_dd_theorem(P({}), 4).all());
    CHECK_THROWS_AS(dd_decompose(P({3, 2, 1}), 3), NotDoubledDistinct);

    for (int t = 1; t <= 6; ++t)
        for (int n = 0; n <= 24; n += 2) {
            PartitionStream stream(n, PartitionClass::doubled_distinct());
            while (auto p = stream.next()) {
                const auto c = check_dd_theorem(*p, t);
                REQUIRE(c.core_in_dd_t_core);
                REQUIRE(c.conjugate_pairs);
                REQUIRE(c.zeroth_is_dd);
                REQUIRE(c.middle_is_sc);
                REQUIRE(c.size_identity);
                REQUIRE(c.hook_count);
            }
        }
}

TEST_CASE("shifted hook quotient formula") {
    CHECK(verify_shifted_quotient_formula(S({5, 4, 1}), 3));
    CHECK(verify_shifted_quotient_formula(S({}), 2));
    for (int t = 1; t <= 6; ++t)
        for (int n = 0; n <= 18; ++n) {
            PartitionStream stream(n, PartitionClass::strict());
            while (auto s = stream.next()) REQUIRE(verify_shifted_quotient_formula(StrictPartition(s->parts()), t));
        }
}
