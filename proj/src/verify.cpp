#include "ddhooks/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "ddhooks/enumerate.hpp"
#include "ddhooks/generating.hpp"
#include "ddhooks/littlewood.hpp"

namespace ddhooks {

namespace {

struct Tally {
    CheckResult r;

    void record(bool ok, const std::string& what) {
        ++r.cases;
        if (ok) return;
        if (r.failures++ == 0) r.first_failure = what;
    }
};

CheckResult compare_series(const std::string& name, int t, const SymbolicSeries& s, int max_size,
                           const std::function<XPolynomial(int)>& oracle) {
    Tally tally{{name, t, 0, 0, {}}};
    for (int m = 0; m <= max_size; ++m) {
        bool ok = false;
        try {
            ok = extract_poly(s, static_cast<std::size_t>(m)) == oracle(m);
        } catch (const Error&) {
            ok = false;
        }
        tally.record(ok, "size " + std::to_string(m));
    }
    return tally.r;
}

std::string label(const Partition& p, int t) { return to_string(p) + " t=" + std::to_string(t); }

template <class Fn>
void each_partition(int max_size, const PartitionClass& cls, Fn fn) {
    for (int n = 0; n <= max_size; ++n) {
        PartitionStream stream(n, cls);
        while (auto p = stream.next()) fn(*p);
    }
}

bool sort_key(const CheckResult& a, const CheckResult& b) {
    return a.name != b.name ? a.name < b.name : a.t < b.t;
}

}  // namespace

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task) {
    const std::size_t workers = std::clamp<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads), 1, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::vector<CheckResult> oracle_sweep(int max_t, int max_size, int threads) {
    if (max_t < 1 || max_size < 0) throw InvalidArgument("sweep needs max_t >= 1 and max_size >= 0");
    const auto N = static_cast<std::size_t>(max_size);
    const auto dd = PartitionClass::doubled_distinct();
    std::vector<std::function<CheckResult()>> tasks;
    for (int t = 1; t <= max_t; ++t) {
        tasks.push_back([=] {
            return compare_series("F", t, gen_F_t(t, N), max_size,
                                  [&](int m) { return brute_poly(m, StatisticKind::nt(t), dd); });
        });
        tasks.push_back([=] {
            return compare_series("Fhat", t, gen_Fhat_t(t, N), max_size,
                                  [&](int m) { return brute_poly(m, StatisticKind::nhat(t), dd); });
        });
        tasks.push_back([=] {
            return compare_series("han", t, gen_han(t, N), max_size, [&](int m) {
                return brute_poly(m, StatisticKind::nt(t), PartitionClass::all());
            });
        });
        tasks.push_back([=] {
            return compare_series("tcore", t, gen_tcore_DD(t, N), max_size, [&](int m) {
                return XPolynomial(std::vector<mpz_class>{count_partitions(m, PartitionClass::dd_t_core(t))});
            });
        });
    }
    tasks.push_back([=] {
        return compare_series("F1", 1, gen_F1(N), max_size,
                              [&](int m) { return brute_poly(m, StatisticKind::n1(), dd); });
    });
    tasks.push_back([=] {
        return compare_series("ddn1hat", 1, gen_DD_n1hat(N), max_size,
                              [&](int m) { return brute_poly(m, StatisticKind::nhat(1), dd); });
    });
    tasks.push_back([=] {
        return compare_series("scn1hat", 1, gen_SC_n1hat(N), max_size, [&](int m) {
            return brute_poly(m, StatisticKind::nhat(1), PartitionClass::self_conjugate());
        });
    });
    tasks.push_back([=] {
        return compare_series("scn1", 1, gen_SC_n1(N), max_size, [&](int m) {
            return brute_poly(m, StatisticKind::n1(), PartitionClass::self_conjugate());
        });
    });

    std::vector<CheckResult> out(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t i) { out[i] = tasks[i](); });
    std::sort(out.begin(), out.end(), sort_key);
    return out;
}

BijectionScale BijectionScale::capped(int max_size, int max_t) const {
    BijectionScale s = *this;
    for (int* v : {&s.frobenius_size, &s.littlewood_size, &s.dd_size, &s.shifted_size, &s.parity_size})
        *v = std::min(*v, max_size);
    for (int* v : {&s.littlewood_max_t, &s.dd_max_t, &s.shifted_max_t, &s.parity_max_t}) *v = std::min(*v, max_t);
    return s;
}

std::vector<CheckResult> bijection_sweep(const BijectionScale& scale, int threads) {
    const auto all = PartitionClass::all();
    const auto strict = PartitionClass::strict();
    const auto dd = PartitionClass::doubled_distinct();
    std::vector<std::function<CheckResult()>> tasks;

    tasks.push_back([=] {
        Tally tally{{"frobenius_roundtrip", 0, 0, 0, {}}};
        each_partition(scale.frobenius_size, all, [&](const Partition& p) {
            tally.record(from_frobenius(frobenius(p)) == p, to_string(p));
        });
        return tally.r;
    });
    for (int t = 1; t <= scale.littlewood_max_t; ++t)
        tasks.push_back([=] {
            Tally tally{{"littlewood_roundtrip", t, 0, 0, {}}};
            each_partition(scale.littlewood_size, all, [&](const Partition& p) {
                const auto d = littlewood_decompose(p, t);
                int size = d.core.size();
                for (const auto& q : d.quotient) size += t * q.size();
                tally.record(littlewood_compose(d) == p && size == p.size() && is_t_core(d.core, t), label(p, t));
            });
            return tally.r;
        });
    for (int t = 1; t <= scale.dd_max_t; ++t)
        tasks.push_back([=] {
            Tally tally{{"dd_decomposition", t, 0, 0, {}}};
            each_partition(scale.dd_size, dd, [&](const Partition& p) {
                const auto c = check_dd_theorem(p, t);
                std::string bad;
                if (!c.core_in_dd_t_core) bad += " DD1";
                if (!c.conjugate_pairs || !c.zeroth_is_dd || !c.middle_is_sc) bad += " DD2";
                if (!c.size_identity) bad += " DD3";
                if (!c.hook_count) bad += " DD4";
                tally.record(bad.empty(), label(p, t) + bad);
            });
            return tally.r;
        });
    for (int t = 1; t <= scale.shifted_max_t; ++t)
        tasks.push_back([=] {
            Tally tally{{"shifted_quotient", t, 0, 0, {}}};
            each_partition(scale.shifted_size, strict, [&](const Partition& p) {
                tally.record(verify_shifted_quotient_formula(StrictPartition(p.parts()), t), label(p, t));
            });
            return tally.r;
        });
    for (int t = 1; t <= scale.parity_max_t; ++t)
        tasks.push_back([=] {
            Tally tally{{"hook_parity", t, 0, 0, {}}};
            each_partition(scale.parity_size, strict, [&](const Partition& p) {
                const StrictPartition s(p.parts());
                const auto d = double_distinct(s);
                const bool has_t = s.contains(t);
                const bool has_half = t % 2 == 0 && s.contains(t / 2);
                const int expected = (!has_t && has_half) ? 1 : (has_t && !has_half) ? -1 : 0;
                const int shifted = count_t_shifted_hooks(s, t);
                tally.record(count_t_hooks(d, t) - 2 * count_t_hooks_above_diagonal(d, t) == expected &&
                                 shifted == count_t_hooks_above_diagonal(d, t),
                             label(p, t));
            });
            return tally.r;
        });

    std::vector<CheckResult> out(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t i) { out[i] = tasks[i](); });
    std::sort(out.begin(), out.end(), sort_key);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
}

}  // namespace ddhooks
