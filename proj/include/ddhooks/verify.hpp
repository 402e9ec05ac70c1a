#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ddhooks {

struct CheckResult {
    std::string name;
    int t = 0;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0 && cases > 0; }
};

/* Runs task(i) for i in [0, count) on up to `threads` workers. */
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task);

/*
 * Coefficientwise comparison of F_t, F-hat_t, Han's product, the doubled
 * distinct t-core series and the one-hook series with the enumeration oracle,
 * for every t <= max_t and size <= max_size.  Sorted by (name, t).
 */
std::vector<CheckResult> oracle_sweep(int max_t, int max_size, int threads = 1);

struct BijectionScale {
    int frobenius_size = 30;
    int littlewood_size = 16;
    int littlewood_max_t = 5;
    int dd_size = 24;
    int dd_max_t = 6;
    int shifted_size = 18;  // size of the strict partition
    int shifted_max_t = 6;
    int parity_size = 20;
    int parity_max_t = 6;

    /* Every bound clamped to max_size and max_t. */
    BijectionScale capped(int max_size, int max_t) const;
};

/* Frobenius and quotient roundtrips, the doubled distinct decomposition clauses, the shifted quotient formula and the hook parity relation. */
std::vector<CheckResult> bijection_sweep(const BijectionScale& scale, int threads = 1);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ddhooks
