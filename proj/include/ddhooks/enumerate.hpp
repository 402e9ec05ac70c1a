#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ddhooks/partition.hpp"
#include "ddhooks/poly.hpp"

namespace ddhooks {

enum class StatKind { NT, NHAT, ST, N1 };

struct StatisticKind {
    StatKind kind = StatKind::NT;
    int t = 1;

    static StatisticKind nt(int t);
    static StatisticKind nhat(int t);
    static StatisticKind st(int t);
    static StatisticKind n1() { return {StatKind::N1, 1}; }

    friend bool operator==(const StatisticKind&, const StatisticKind&) = default;
};

std::string to_string(const StatisticKind& s);
/* "nt", "nhat", "st", "n1" with the given t. */
StatisticKind parse_statistic(const std::string& text, int t);

/* Evaluates the statistic; ST reads p as a strict partition. */
int statistic(const Partition& p, const StatisticKind& stat);

/*
 * Lazy stream of the class members of size n, in descending lexicographic
 * order.  Strictness is enforced during generation; doubled distinct
 * partitions are produced by doubling strict partitions of n/2; the remaining
 * classes are post-filtered.
 */
class PartitionStream {
public:
    PartitionStream(int n, PartitionClass cls);

    std::optional<Partition> next();

private:
    bool advance();
    bool fill_from(std::size_t index, int remaining, int cap);

    int n_;
    int base_n_;
    PartitionClass cls_;
    bool strict_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int n, PartitionClass cls);
std::size_t count_partitions(int n, PartitionClass cls);

/* Sum over class members of size n of x^stat. */
XPolynomial brute_poly(int n, const StatisticKind& stat, PartitionClass cls);

/* Fraction of strict partitions of n having a part equal to t. */
mpq_class part_containment_frequency(int n, int t);

}  // namespace ddhooks
