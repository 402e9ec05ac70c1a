#include "ddhooks/enumerate.hpp"

#include "ddhooks/error.hpp"

namespace ddhooks {

StatisticKind StatisticKind::nt(int t) {
    if (t < 1) throw InvalidArgument("t must be positive");
    return {StatKind::NT, t};
}

StatisticKind StatisticKind::nhat(int t) {
    if (t < 1) throw InvalidArgument("t must be positive");
    return {StatKind::NHAT, t};
}

StatisticKind StatisticKind::st(int t) {
    if (t < 1) throw InvalidArgument("t must be positive");
    return {StatKind::ST, t};
}

std::string to_string(const StatisticKind& s) {
    switch (s.kind) {
        case StatKind::NT: return "nt:" + std::to_string(s.t);
        case StatKind::NHAT: return "nhat:" + std::to_string(s.t);
        case StatKind::ST: return "st:" + std::to_string(s.t);
        case StatKind::N1: return "n1";
    }
    return "?";
}

StatisticKind parse_statistic(const std::string& text, int t) {
    if (text == "nt") return StatisticKind::nt(t);
    if (text == "nhat") return StatisticKind::nhat(t);
    if (text == "st") return StatisticKind::st(t);
    if (text == "n1") return StatisticKind::n1();
    throw InvalidArgument("unknown statistic", text);
}

int statistic(const Partition& p, const StatisticKind& stat) {
    switch (stat.kind) {
        case StatKind::NT: return count_t_hooks(p, stat.t);
        case StatKind::NHAT: return count_t_hooks_above_diagonal(p, stat.t);
        case StatKind::ST: return count_t_shifted_hooks(StrictPartition(p.parts()), stat.t);
        case StatKind::N1: return count_t_hooks(p, 1);
    }
    return 0;
}

PartitionStream::PartitionStream(int n, PartitionClass cls) : n_(n), base_n_(n), cls_(cls) {
    if (n < 0) throw InvalidArgument("size must be nonnegative", std::to_string(n));
    const bool dd = cls.kind == ClassKind::DoubledDistinct || cls.kind == ClassKind::DDTCore;
    strict_ = dd || cls.kind == ClassKind::Strict;
    if (dd) {
        if (n % 2 != 0) done_ = true;
        base_n_ = n / 2;
    }
}

// Greedy descending fill of parts_[index..] summing to `remaining` with parts <= cap.
bool PartitionStream::fill_from(std::size_t index, int remaining, int cap) {
    parts_.resize(index);
    if (strict_ && remaining > cap * (cap + 1) / 2) return false;
    while (remaining > 0) {
        if (cap < 1) return false;
        const int part = std::min(cap, remaining);
        parts_.push_back(part);
        remaining -= part;
        if (strict_) cap = part - 1;
    }
    return true;
}

bool PartitionStream::advance() {
    if (!started_) {
        started_ = true;
        return fill_from(0, base_n_, base_n_);
    }
    int tail = 0;
    for (std::size_t i = parts_.size(); i-- > 0;) {
        const int v = parts_[i] - 1;
        tail += parts_[i];
        if (v < 1) continue;
        const int rest = tail - v;
        parts_[i] = v;
        if (fill_from(i + 1, rest, strict_ ? v - 1 : v)) return true;
        parts_.resize(i + 1);
        parts_[i] = v + 1;
    }
    return false;
}

std::optional<Partition> PartitionStream::next() {
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        Partition p(parts_);
        switch (cls_.kind) {
            case ClassKind::All:
            case ClassKind::Strict: return p;
            case ClassKind::DoubledDistinct: return double_distinct(StrictPartition(parts_));
            case ClassKind::DDTCore: {
                Partition dd = double_distinct(StrictPartition(parts_));
                if (is_t_core(dd, cls_.t)) return dd;
                break;
            }
            case ClassKind::SelfConjugate:
            case ClassKind::TCore:
                if (classify(p, cls_)) return p;
                break;
        }
    }
    return std::nullopt;
}

std::vector<Partition> partitions_of(int n, PartitionClass cls) {
    std::vector<Partition> out;
    PartitionStream stream(n, cls);
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

std::size_t count_partitions(int n, PartitionClass cls) {
    std::size_t count = 0;
    PartitionStream stream(n, cls);
    while (stream.next()) ++count;
    return count;
}

XPolynomial brute_poly(int n, const StatisticKind& stat, PartitionClass cls) {
    if (stat.kind == StatKind::ST && cls.kind != ClassKind::Strict)
        throw IncompatibleStatistic("shifted hooks are defined on strict partitions");
    std::vector<mpz_class> coeffs;
    PartitionStream stream(n, cls);
    while (auto p = stream.next()) {
        const auto k = static_cast<std::size_t>(statistic(*p, stat));
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        coeffs[k] += 1;
    }
    return XPolynomial(coeffs);
}

mpq_class part_containment_frequency(int n, int t) {
    if (n < 1) throw InvalidArgument("size must be positive", std::to_string(n));
    long total = 0, hits = 0;
    PartitionStream stream(n, PartitionClass::strict());
    while (auto p = stream.next()) {
        ++total;
        if (StrictPartition(p->parts()).contains(t)) ++hits;
    }
    mpq_class f(hits, total);
    f.canonicalize();
    return f;
}

}  // namespace ddhooks
