#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

#include "ddhooks/asymptotics.hpp"
#include "ddhooks/enumerate.hpp"

namespace ddhooks {

enum class DistSource { Auto, Series, Oracle };

struct DistributionTable {
    int n = 0;
    PartitionClass cls;
    StatisticKind stat;
    std::map<int, mpz_class> counts;
    std::map<int, mpq_class> mass;
    mpz_class total_count;
    std::string source;  // "series" or "oracle"

    int t() const noexcept { return stat.t; }
};

/* Throws IncompatibleStatistic unless NHAT is over doubled distinct and ST over strict. */
void require_compatible(const PartitionClass& cls, const StatisticKind& stat);

/* True when a generating function yields the polynomial for this class and statistic. */
bool has_series_source(const PartitionClass& cls, const StatisticKind& stat);

/* Polynomial sum of x^stat over the class members of size n, from the generating function. */
XPolynomial series_poly(int n, const PartitionClass& cls, const StatisticKind& stat);

/*
 * Exact law of the statistic over the class members of size n.  Auto uses the
 * generating function when one exists; cross_check also runs the oracle and
 * throws an OracleMismatch error when the two disagree.
 */
DistributionTable exact_distribution(int n, const PartitionClass& cls, const StatisticKind& stat,
                                     DistSource source = DistSource::Auto, bool cross_check = false);

/* Builds a table from count polynomial coefficients. */
DistributionTable distribution_from_poly(int n, const PartitionClass& cls, const StatisticKind& stat,
                                         const XPolynomial& poly, std::string source);

struct ExactMoments {
    mpq_class mean;
    mpq_class variance;
};
ExactMoments exact_mean_variance(const DistributionTable& d);

enum class Centering { Asymptotic, Exact };

/*
 * (1/q(n)) sum_m dd_{t,m}(2n) e^{(m - mu) r / sigma} over doubled distinct
 * partitions of 2n, for n_t (hat = false) or n-hat_t (hat = true).
 */
Real mgf_normalized(int t, int n, Real r, bool hat, Centering centering = Centering::Asymptotic);
/* Same from a precomputed table over doubled distinct partitions of 2n. */
Real mgf_normalized(const DistributionTable& d, Real r, Centering centering = Centering::Asymptotic);

/* Standard normal CDF. */
Real normal_cdf(Real z);

/* sup |F(x) - Phi((x - mean)/sd)| over the jump points; DegenerateDistribution for zero variance. */
Real kolmogorov_distance_to_normal(const DistributionTable& d);

}  // namespace ddhooks
