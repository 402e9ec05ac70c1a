#include "ddhooks/littlewood.hpp"

#include <algorithm>
#include <climits>

#include "ddhooks/error.hpp"

namespace ddhooks {

namespace {

void require_t(int t) {
    if (t < 1) throw InvalidArgument("t must be positive", std::to_string(t));
}

bool strictly_decreasing_nonnegative(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i > 0 && v[i] >= v[i - 1]) return false;
    }
    return true;
}

// Builds the partition whose abacus has the given runner charges and runner
// partitions: runner r carries beads at levels mu_i - i + c_r, i >= 1.
Partition assemble_from_runners(int t, const std::vector<int>& charges, const std::vector<Partition>& runners) {
    long charge_sum = 0;
    int floor_level = INT_MAX;
    for (int r = 0; r < t; ++r) {
        charge_sum += charges[static_cast<std::size_t>(r)];
        const int m = static_cast<int>(runners[static_cast<std::size_t>(r)].length());
        floor_level = std::min(floor_level, charges[static_cast<std::size_t>(r)] - m - 1);
    }
    if (charge_sum != 0) throw InvalidArgument("runner charges must sum to zero");

    std::vector<int> beads;
    for (int r = 0; r < t; ++r) {
        const Partition& mu = runners[static_cast<std::size_t>(r)];
        const int c = charges[static_cast<std::size_t>(r)];
        for (int i = 1;; ++i) {
            const int level = mu.row(static_cast<std::size_t>(i - 1)) - i + c;
            if (level <= floor_level) break;
            beads.push_back(t * level + r);
        }
    }
    std::sort(beads.begin(), beads.end(), std::greater<>());
    // Every position below t * (floor_level + 1) is occupied, so with total charge
    // zero the first missing row index lines up with part 0.
    const int m = static_cast<int>(beads.size());
    if (t * (floor_level + 1) + m != 0) throw InvalidArgument("inconsistent abacus charges");

    std::vector<int> parts;
    for (int i = 1; i <= m; ++i) {
        const int part = beads[static_cast<std::size_t>(i - 1)] + i;
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::vector<int> beta_numbers(const Partition& p, int beads) {
    std::vector<int> beta;
    for (int i = 1; i <= beads; ++i) beta.push_back(p.row(static_cast<std::size_t>(i - 1)) - i + beads);
    return beta;
}

}  // namespace

FrobeniusSymbol frobenius(const Partition& p) {
    const int s = durfee_side(p);
    const Partition c = conjugate(p);
    FrobeniusSymbol f;
    for (int i = 1; i <= s; ++i) {
        f.top.push_back(p.row(static_cast<std::size_t>(i - 1)) - i);
        f.bottom.push_back(c.row(static_cast<std::size_t>(i - 1)) - i);
    }
    return f;
}

Partition from_frobenius(const FrobeniusSymbol& f) {
    if (f.top.size() != f.bottom.size() || !strictly_decreasing_nonnegative(f.top) ||
        !strictly_decreasing_nonnegative(f.bottom))
        throw MalformedArray("Frobenius rows must be strictly decreasing, nonnegative, equal length");
    const int s = static_cast<int>(f.top.size());
    std::vector<int> rows;
    for (int i = 1; i <= s; ++i) rows.push_back(f.top[static_cast<std::size_t>(i - 1)] + i);
    // Rows below the Durfee square come from the columns lambda'_j = b_j + j.
    for (int r = s + 1;; ++r) {
        int len = 0;
        for (int j = 1; j <= s; ++j)
            if (f.bottom[static_cast<std::size_t>(j - 1)] + j >= r) ++len;
        if (len == 0) break;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

Partition wright_map(const TwoRowedArray& a) {
    if (!strictly_decreasing_nonnegative(a.top) || !strictly_decreasing_nonnegative(a.bottom))
        throw MalformedArray("rows must be strictly decreasing and nonnegative");
    const int u = static_cast<int>(a.top.size());
    const int v = static_cast<int>(a.bottom.size());

    std::vector<int> mu;
    for (int k = 1; k <= u; ++k) mu.push_back(a.top[static_cast<std::size_t>(k - 1)] + k - (u - v));

    std::vector<int> lower;
    for (int k = 1; k <= v; ++k) lower.push_back(a.bottom[static_cast<std::size_t>(k - 1)] - v + k);
    while (!lower.empty() && lower.back() == 0) lower.pop_back();
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (lower[i] < 1 || (i > 0 && lower[i] > lower[i - 1]))
            throw MalformedArray("lower block is not a partition");
    const Partition lower_conj = conjugate(Partition(lower));
    mu.insert(mu.end(), lower_conj.parts().begin(), lower_conj.parts().end());

    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] < 1 || (i > 0 && mu[i] > mu[i - 1])) throw MalformedArray("Wright image is not a partition");
    return Partition(std::move(mu));
}

std::vector<TwoRowedArray> quotient_arrays(const Partition& p, int t) {
    require_t(t);
    const FrobeniusSymbol f = frobenius(p);
    std::vector<TwoRowedArray> arrays(static_cast<std::size_t>(t));
    for (int a : f.top) arrays[static_cast<std::size_t>(a % t)].top.push_back(a / t);
    for (int b : f.bottom) arrays[static_cast<std::size_t>(t - 1 - b % t)].bottom.push_back(b / t);
    return arrays;
}

std::vector<int> runner_charges(const Partition& p, int t) {
    require_t(t);
    const int beads = t * (static_cast<int>(p.length()) / t + 1);
    std::vector<int> count(static_cast<std::size_t>(t), 0);
    for (int b : beta_numbers(p, beads)) ++count[static_cast<std::size_t>(b % t)];
    std::vector<int> charges(static_cast<std::size_t>(t));
    for (int r = 0; r < t; ++r) charges[static_cast<std::size_t>(r)] = count[static_cast<std::size_t>(r)] - beads / t;
    return charges;
}

Partition t_core(const Partition& p, int t) {
    return assemble_from_runners(t, runner_charges(p, t), std::vector<Partition>(static_cast<std::size_t>(t)));
}

QuotientDecomposition littlewood_decompose(const Partition& p, int t) {
    QuotientDecomposition d;
    d.t = t;
    d.core = t_core(p, t);
    for (const auto& arr : quotient_arrays(p, t)) d.quotient.push_back(wright_map(arr));
    return d;
}

Partition littlewood_compose(const QuotientDecomposition& d) {
    require_t(d.t);
    if (d.quotient.size() != static_cast<std::size_t>(d.t))
        throw InvalidArgument("quotient must have t components", std::to_string(d.quotient.size()));
    if (!is_t_core(d.core, d.t)) throw CoreNotTCore("core has a hook divisible by t", to_string(d.core));
    return assemble_from_runners(d.t, runner_charges(d.core, d.t), d.quotient);
}

QuotientDecomposition dd_decompose(const Partition& p, int t) {
    if (!is_doubled_distinct(p)) throw NotDoubledDistinct("input is not doubled distinct", to_string(p));
    return littlewood_decompose(p, t);
}

DDTheoremCheck check_dd_theorem(const Partition& p, int t) {
    const QuotientDecomposition d = dd_decompose(p, t);
    const auto& nu = d.quotient;
    DDTheoremCheck c;
    c.core_in_dd_t_core = classify(d.core, PartitionClass::dd_t_core(t));

    c.conjugate_pairs = true;
    for (int i = 1; i <= (t + 1) / 2 - 1; ++i)
        if (nu[static_cast<std::size_t>(i)] != conjugate(nu[static_cast<std::size_t>(t - i)])) c.conjugate_pairs = false;
    c.zeroth_is_dd = is_doubled_distinct(nu[0]);
    if (t % 2 == 0) c.middle_is_sc = is_self_conjugate(nu[static_cast<std::size_t>(t / 2)]);

    int rhs = d.core.size() + t * nu[0].size();
    const int pairs = (t % 2 == 1) ? (t - 1) / 2 : (t - 2) / 2;
    for (int i = 1; i <= pairs; ++i) rhs += 2 * t * nu[static_cast<std::size_t>(i)].size();
    if (t % 2 == 0) rhs += t * nu[static_cast<std::size_t>(t / 2)].size();
    c.size_identity = (rhs == p.size());

    int ones = 0;
    for (const auto& q : nu) ones += count_t_hooks(q, 1);
    c.hook_count = (ones == count_t_hooks(p, t));
    return c;
}

int twice_shifted_quotient_rhs(const QuotientDecomposition& d) {
    const int t = d.t;
    const auto& nu = d.quotient;
    int twice = 2 * count_t_hooks_above_diagonal(nu[0], 1);
    if (t % 2 == 1) {
        for (int i = 1; i <= t - 1; ++i) twice += count_t_hooks(nu[static_cast<std::size_t>(i)], 1);
    } else {
        twice += 2 * count_t_hooks_above_diagonal(nu[static_cast<std::size_t>(t / 2)], 1);
        for (int i = 1; i <= t / 2 - 1; ++i)
            twice += count_t_hooks(nu[static_cast<std::size_t>(i)], 1) +
                     count_t_hooks(nu[static_cast<std::size_t>(t - i)], 1);
    }
    return twice;
}

bool verify_shifted_quotient_formula(const StrictPartition& s, int t) {
    const Partition dd = double_distinct(s);
    return 2 * count_t_hooks_above_diagonal(dd, t) == twice_shifted_quotient_rhs(dd_decompose(dd, t));
}

}  // namespace ddhooks
