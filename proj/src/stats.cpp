#include "ddhooks/stats.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ddhooks/error.hpp"
#include "ddhooks/generating.hpp"

namespace ddhooks {

namespace {

std::string describe(int n, const PartitionClass& cls, const StatisticKind& stat) {
    return "n=" + std::to_string(n) + " class=" + to_string(cls) + " stat=" + to_string(stat);
}

bool is_dd(const PartitionClass& c) { return c.kind == ClassKind::DoubledDistinct; }

Real to_real(const mpq_class& q) { return static_cast<Real>(q.get_d()); }

Real ratio_real(const mpz_class& a, const mpz_class& b) { return to_real(mpq_class(a, b)); }

}  // namespace

void require_compatible(const PartitionClass& cls, const StatisticKind& stat) {
    if (stat.kind == StatKind::NHAT && !is_dd(cls))
        throw IncompatibleStatistic("n-hat is defined only over doubled distinct partitions", to_string(cls));
    if (stat.kind == StatKind::ST && cls.kind != ClassKind::Strict)
        throw IncompatibleStatistic("shifted hooks are defined only over strict partitions", to_string(cls));
}

bool has_series_source(const PartitionClass& cls, const StatisticKind& stat) {
    switch (cls.kind) {
        case ClassKind::All: return stat.kind == StatKind::NT || stat.kind == StatKind::N1;
        case ClassKind::DoubledDistinct: return stat.kind != StatKind::ST;
        case ClassKind::Strict: return stat.kind == StatKind::ST;
        case ClassKind::SelfConjugate: return stat.kind == StatKind::N1;
        default: return false;
    }
}

XPolynomial series_poly(int n, const PartitionClass& cls, const StatisticKind& stat) {
    require_compatible(cls, stat);
    if (n < 0) throw DomainError("size must be nonnegative", std::to_string(n));
    if (!has_series_source(cls, stat)) throw InvalidArgument("no generating function for", describe(n, cls, stat));
    const auto ring = symbolic_ring();
    const auto un = static_cast<std::size_t>(n);
    switch (cls.kind) {
        case ClassKind::All: return extract_poly(gen_han(ring, stat.t, un), un);
        case ClassKind::SelfConjugate: return extract_poly(gen_SC_n1(ring, un), un);
        case ClassKind::Strict:
            // s_t over strict partitions of n equals n-hat_t over doubled distinct partitions of 2n
            return extract_poly(gen_Fhat_t(ring, stat.t, un, Variable::Q2), un);
        case ClassKind::DoubledDistinct: {
            if (n % 2 != 0) throw DomainError("doubled distinct partitions have even size", std::to_string(n));
            const auto half = un / 2;
            if (stat.kind == StatKind::NHAT) return extract_poly(gen_Fhat_t(ring, stat.t, half, Variable::Q2), half);
            if (stat.kind == StatKind::N1) return extract_poly(gen_F1(ring, half, Variable::Q2), half);
            return extract_poly(gen_F_t(ring, stat.t, half, Variable::Q2), half);
        }
        default: break;
    }
    throw InvalidArgument("no generating function for", describe(n, cls, stat));
}

DistributionTable distribution_from_poly(int n, const PartitionClass& cls, const StatisticKind& stat,
                                         const XPolynomial& poly, std::string source) {
    DistributionTable d;
    d.n = n;
    d.cls = cls;
    d.stat = stat;
    d.source = std::move(source);
    const auto& c = poly.coeffs();
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (sgn(c[m]) == 0) continue;
        if (c[m].get_den() != 1 || sgn(c[m]) < 0)
            throw NonCancellation("count is not a nonnegative integer", rational_string(c[m]));
        d.counts[static_cast<int>(m)] = c[m].get_num();
        d.total_count += c[m].get_num();
    }
    if (sgn(d.total_count) == 0) throw DomainError("class has no members of this size", describe(n, cls, stat));
    for (const auto& [m, k] : d.counts) {
        mpq_class p(k, d.total_count);
        p.canonicalize();
        d.mass[m] = p;
    }
    return d;
}

DistributionTable exact_distribution(int n, const PartitionClass& cls, const StatisticKind& stat, DistSource source,
                                     bool cross_check) {
    require_compatible(cls, stat);
    if (n < 0) throw DomainError("size must be nonnegative", std::to_string(n));
    if (is_dd(cls) && n % 2 != 0) throw DomainError("doubled distinct partitions have even size", std::to_string(n));
    const bool series = source == DistSource::Series || (source == DistSource::Auto && has_series_source(cls, stat));
    if (source == DistSource::Series && !has_series_source(cls, stat))
        throw InvalidArgument("no generating function for", describe(n, cls, stat));

    DistributionTable d = series ? distribution_from_poly(n, cls, stat, series_poly(n, cls, stat), "series")
                                 : distribution_from_poly(n, cls, stat, brute_poly(n, stat, cls), "oracle");
    if (cross_check && series) {
        const auto oracle = distribution_from_poly(n, cls, stat, brute_poly(n, stat, cls), "oracle");
        if (oracle.counts != d.counts)
            throw Error("OracleMismatch", "generating function and enumeration disagree", describe(n, cls, stat));
    }
    return d;
}

ExactMoments exact_mean_variance(const DistributionTable& d) {
    mpq_class m1 = 0, m2 = 0;
    for (const auto& [v, p] : d.mass) {
        m1 += p * v;
        m2 += p * v * v;
    }
    ExactMoments r{m1, m2 - m1 * m1};
    r.mean.canonicalize();
    r.variance.canonicalize();
    return r;
}

Real mgf_normalized(const DistributionTable& d, Real r, Centering centering) {
    if (!is_dd(d.cls) || (d.stat.kind != StatKind::NT && d.stat.kind != StatKind::NHAT))
        throw IncompatibleStatistic("the normalized MGF is defined for n_t or n-hat_t over doubled distinct partitions",
                                    to_string(d.cls));
    const int half = d.n / 2;
    Real mu = 0, sigma = 0;
    if (centering == Centering::Asymptotic) {
        if (half < 1) throw DegenerateDistribution("asymptotic centering needs n >= 1");
        const auto mv = mean_var_asymptotic(d.stat.t, half, d.stat.kind == StatKind::NHAT);
        mu = mv.mean;
        if (!(mv.variance > 0)) throw DegenerateDistribution("asymptotic variance is not positive");
        sigma = std::sqrt(mv.variance);
    } else {
        const auto em = exact_mean_variance(d);
        if (sgn(em.variance) <= 0) throw DegenerateDistribution("variance is zero");
        mu = to_real(em.mean);
        sigma = std::sqrt(to_real(em.variance));
    }
    // log-sum-exp over log(count) + (m - mu) r / sigma
    std::vector<Real> terms;
    Real top = -std::numeric_limits<Real>::infinity();
    for (const auto& [m, k] : d.counts) {
        const Real e = log_of(k) + (static_cast<Real>(m) - mu) * r / sigma;
        terms.push_back(e);
        top = std::max(top, e);
    }
    Real s = 0;
    for (Real e : terms) s += std::exp(e - top);
    return std::exp(top + std::log(s) - log_of(d.total_count));
}

Real mgf_normalized(int t, int n, Real r, bool hat, Centering centering) {
    if (n < 1) throw DomainError("n must be positive", std::to_string(n));
    const auto stat = hat ? StatisticKind::nhat(t) : StatisticKind::nt(t);
    return mgf_normalized(exact_distribution(2 * n, PartitionClass::doubled_distinct(), stat), r, centering);
}

Real normal_cdf(Real z) { return 0.5L * std::erfc(-z / std::sqrt(Real(2))); }

Real kolmogorov_distance_to_normal(const DistributionTable& d) {
    const auto em = exact_mean_variance(d);
    if (sgn(em.variance) <= 0) throw DegenerateDistribution("variance is zero", to_string(d.stat));
    const Real mu = to_real(em.mean);
    const Real sd = std::sqrt(to_real(em.variance));
    Real best = 0;
    mpz_class below = 0;
    for (const auto& [m, k] : d.counts) {
        const Real phi = normal_cdf((static_cast<Real>(m) - mu) / sd);
        const Real left = ratio_real(below, d.total_count);
        below += k;
        const Real right = ratio_real(below, d.total_count);
        best = std::max({best, std::fabs(left - phi), std::fabs(right - phi)});
    }
    return best;
}

}  // namespace ddhooks
