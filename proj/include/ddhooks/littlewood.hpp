#pragma once

#include <vector>

#include "ddhooks/partition.hpp"

namespace ddhooks {

/* (top | bottom) over the Durfee diagonal: top_i = p_i - i, bottom_i = p'_i - i. */
struct FrobeniusSymbol {
    std::vector<int> top;
    std::vector<int> bottom;

    friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;
};

/* Strictly decreasing nonnegative rows of possibly different lengths. */
struct TwoRowedArray {
    std::vector<int> top;
    std::vector<int> bottom;

    friend bool operator==(const TwoRowedArray&, const TwoRowedArray&) = default;
};

struct QuotientDecomposition {
    int t = 1;
    Partition core;
    std::vector<Partition> quotient;  // index 0 .. t-1

    friend bool operator==(const QuotientDecomposition&, const QuotientDecomposition&) = default;
};

FrobeniusSymbol frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusSymbol& f);

/*
 * mu_k = a_k + k - (u - v) for k <= u, followed by the conjugate of
 * (b_k - v + k)_k.  Zero parts are dropped; anything that is not a partition
 * raises MalformedArray.
 */
Partition wright_map(const TwoRowedArray& a);

/*
 * Splits the Frobenius symbol by residue: top entries a = tq + j and bottom
 * entries b = tq' + (t-1-j) contribute q and q' to array j.
 */
std::vector<TwoRowedArray> quotient_arrays(const Partition& p, int t);

/* Abacus charge of each runner: beads at nonnegative positions minus holes at negative ones. */
std::vector<int> runner_charges(const Partition& p, int t);

Partition t_core(const Partition& p, int t);
QuotientDecomposition littlewood_decompose(const Partition& p, int t);
Partition littlewood_compose(const QuotientDecomposition& d);

/* Each clause of the doubled distinct decomposition theorem, checked separately. */
struct DDTheoremCheck {
    bool core_in_dd_t_core = false;    // DD1
    bool conjugate_pairs = false;      // DD2: quotient[i] = quotient[t-i]'
    bool zeroth_is_dd = false;         // DD2: quotient[0] doubled distinct
    bool middle_is_sc = true;          // DD2': quotient[t/2] self-conjugate for even t
    bool size_identity = false;        // DD3
    bool hook_count = false;           // DD4: n_t = sum of n_1 over the quotient

    bool all() const {
        return core_in_dd_t_core && conjugate_pairs && zeroth_is_dd && middle_is_sc && size_identity &&
               hook_count;
    }
};

QuotientDecomposition dd_decompose(const Partition& p, int t);
DDTheoremCheck check_dd_theorem(const Partition& p, int t);

/*
 * Twice the quotient-side expression for n-hat_t of a doubled distinct
 * partition (the expression carries a factor 1/2).
 */
int twice_shifted_quotient_rhs(const QuotientDecomposition& d);
bool verify_shifted_quotient_formula(const StrictPartition& s, int t);

}  // namespace ddhooks
