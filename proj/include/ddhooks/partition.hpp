#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ddhooks {

/* Ragged matrix: row i holds one entry per box of row i of a diagram. */
using HookMatrix = std::vector<std::vector<int>>;

/*
 * Immutable integer partition.  Parts are positive and weakly decreasing;
 * the empty part list is the partition of 0.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /* 0-based row access; rows past the end have length 0. */
    int row(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/* Partition into distinct parts. */
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return p_.parts(); }
    std::size_t length() const noexcept { return p_.length(); }
    int size() const noexcept { return p_.size(); }
    bool empty() const noexcept { return p_.empty(); }
    int row(std::size_t i) const noexcept { return p_.row(i); }
    bool contains(int part) const noexcept;

    const Partition& as_partition() const noexcept { return p_; }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

private:
    Partition p_;
};

enum class ClassKind { All, Strict, DoubledDistinct, SelfConjugate, TCore, DDTCore };

struct PartitionClass {
    ClassKind kind = ClassKind::All;
    int t = 0;

    static PartitionClass all() { return {ClassKind::All, 0}; }
    static PartitionClass strict() { return {ClassKind::Strict, 0}; }
    static PartitionClass doubled_distinct() { return {ClassKind::DoubledDistinct, 0}; }
    static PartitionClass self_conjugate() { return {ClassKind::SelfConjugate, 0}; }
    static PartitionClass t_core(int t);
    static PartitionClass dd_t_core(int t);

    friend bool operator==(const PartitionClass&, const PartitionClass&) = default;
};

std::string to_string(const Partition& p);
std::string to_string(const PartitionClass& c);
/* Accepts "all", "strict", "dd", "sc", "tcore:3", "ddtcore:3". */
PartitionClass parse_partition_class(const std::string& text);

Partition conjugate(const Partition& p);

/* h(i,j) = lambda_i + lambda'_j - i - j + 1, rows in diagram order. */
HookMatrix hook_lengths(const Partition& p);
int count_t_hooks(const Partition& p, int t);
/* Boxes (i,j) with j > i and hook length t. */
int count_t_hooks_above_diagonal(const Partition& p, int t);
int count_distinct_parts(const Partition& p);

Partition double_distinct(const StrictPartition& s);
StrictPartition undouble(const Partition& p);
bool is_doubled_distinct(const Partition& p);

/*
 * Shifted hook lengths computed from the shifted diagram itself: boxes to the
 * right, below, the box, plus the whole of row j+1 when it exists.
 */
HookMatrix shifted_hook_lengths(const StrictPartition& s);
int count_t_shifted_hooks(const StrictPartition& s, int t);

int durfee_side(const Partition& p);
bool is_t_core(const Partition& p, int t);
bool is_self_conjugate(const Partition& p);
bool is_strict(const Partition& p);
bool classify(const Partition& p, const PartitionClass& c);

}  // namespace ddhooks
